#include "compass/competency.hpp"

// Kept identical to queries/*.rq.
namespace compass::competency::listings {

const std::string_view client_q3 = R"rq(SELECT DISTINCT ?service ?code WHERE {
    BIND(cp:Client16 AS ?client).
    ?client  cp:hasNeed  ?need.
    ?need  rdf:type  cp:ClientNeed.
    ?needSatisfier  rdf:type  cp:NeedSatisfier.
    ?need  cp:hasNeedSatisfier  ?needSatisfier.
    ?service  rdf:type  cp:Service ; cids:hasCode ?code ;
        cp:providesSatisfier ?needSatisfier.
}
)rq";

const std::string_view client_q6 = R"rq(SELECT DISTINCT ?service ?code WHERE {
    BIND(cp:NS-Housing AS ?needSatisfier).
    BIND(cp:Comp-Inst-Female-Homeless-Area0 AS ?compChar)
    ?service  rdf:type  cp:Service ;
        cids:hasCode ?code ; cp:hasRequirement ?compChar ;
        cp:providesSatisfier  ?needSatisfier.
}
)rq";

const std::string_view client_q7_1 = R"rq(SELECT DISTINCT ?service ?dataReq WHERE {
    BIND(cp:S06-1-Counseling AS ?service).
    ?dataReq rdf:type cp:CL-Info_Privacy.
    {?service cp:hasRequirement [cids:hasCode ?dataReq].
    } UNION {
        ?service cp:hasRequirement [
            rdf:type cids:CompositeCharacteristic   ;
            oep:hasPart [cids:hasCode ?dataReq]]. }}
)rq";

const std::string_view service_q2 = R"rq(SELECT DISTINCT ?client ?weeks WHERE {
    BIND(cp:Client2 AS ?client).
    ?serviceEvent rdf:type cp:ServiceEvent ;
        cp:forClient ?client ;
        time:hasBeginning ?beg; time:hasEnd ?end;
        cids:hasCode cp:INST-Counseling.
    BIND((ofn:weeksBetween(
        spif:parseDate(?end, "yyyy-MM-dd'T'HH:mm:ss.SSS"),
        spif:parseDate(?beg, "yyyy-MM-dd'T'HH:mm:ss.SSS")))
        AS ?weeks). }
)rq";

const std::string_view outcome_q1 = R"rq(SELECT ?loc ?sh (COUNT(?sh) AS ?count) WHERE {
    ?serviceEvent rdf:type cp:ServiceEvent ;
                  cp:forClient [cp:satisfiesStakeholder ?sh].
    ?sh a cids:Stakeholder ;
                 i72:located_in ?loc.
    { ?sh cids:hasCharacteristic [cids:hasCode ?demo].
    } UNION {
        ?sh cids:hasCharacteristic
            [ a cids:CompositeCharacteristic;
                oep:hasPart [cids:hasCode ?demo]]
}} GROUP BY ?sh ?loc
ORDER BY DESC(?count)
)rq";

}  // namespace compass::competency::listings
