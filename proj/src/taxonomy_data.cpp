#include "compass/ontology.hpp"

namespace compass {

// Mirrors data/taxonomy.csv; a unit test keeps the two identical.
std::string_view default_taxonomy_csv() {
  static constexpr std::string_view csv = R"csv(instance,codeClass,label,externalRef
INST-Toddler,CL-Age,Toddler,
INST-Young,CL-Age,Young,
INST-Youth,CL-Age,Youth,
INST-Adult,CL-Age,Adult,
INST-Senior,CL-Age,Senior,
INST-Female,CL-Gender,Female,
INST-Male,CL-Gender,Male,
INST-Non_Binary,CL-Gender,Non-binary,
INST-Ethnicity_Not_Stated,CL-Ethnicity,Not stated,
INST-Racialized,CL-Ethnicity,Racialized,
INST-Single,CL-Family_Status,Single,
INST-Single_Parent,CL-Family_Status,Single parent,
INST-Religion_Not_Stated,CL-Religion,Not stated,
INST-LGBTQ,CL-Sexuality,LGBTQ,
INST-First_Nations,CL-Aboriginal_Group,First Nations,
INST-Metis,CL-Aboriginal_Group,Metis,
INST-Inuit,CL-Aboriginal_Group,Inuit,
INST-Citizen,CL-Citizenship,Citizen,
INST-New_Immigrant,CL-Citizenship,New immigrant,
INST-Refugee,CL-Citizenship,Refugee,
INST-Low_Income,CL-Finance_Status,Low income,
INST-Highschool_Complete,CL-Education_Status,High school complete,
INST-Unemployed,CL-Employment_Status,Unemployed,
INST-Employed,CL-Employment_Status,Employed,
INST-On_Probation,CL-Legal,On probation,
INST-Emergency_Shelter_Resident,CL-Shelter_Type,Emergency shelter resident,
INST-Housed,CL-Homelessness,Housed,
INST-Homeless,CL-Homelessness,Homeless,
INST-At_Risk_Of_Homelessness,CL-Homelessness,At risk of homelessness,
INST-Safe,CL-Safety,Safe,
INST-Unsafe,CL-Safety,Unsafe,
INST-Addicted,CL-Health_Status,Addicted,
INST-Chronic_Illness,CL-Health_Status,Chronic illness,
INST-Trauma_History,CL-Mental_Health,History of trauma,
INST-Depression,CL-Mental_Health,Depression,
INST-Cultural_Barrier,CL-Constraint,Cultural barrier,
INST-Social_Limitation,CL-Constraint,Social limitation,
INST-Acute,CL-Rank,Acute,
INST-Complex,CL-Rank,Complex,
INST-Severe,CL-Rank,Severe,
INST-Stable,CL-Rank,Stable,
INST-Past,CL-Temporality,Past,
INST-Long_Term,CL-Temporality,Long-term,
INST-Ongoing,CL-Temporality,Ongoing,
INST-Doctor_Yes,CL-Info_Privacy,A medical doctor may access client data,
INST-Doctor_No,CL-Info_Privacy,No medical doctor access to client data,
INST-Service_Used_Yes,CL-Info_Privacy,The service itself uses client data,
INST-Service_Used_No,CL-Info_Privacy,The service does not use client data,
INST-Police_Access_No,CL-Info_Privacy,No police access to client data,
INST-Government_Access_Yes,CL-Info_Privacy,Government may access client data,
INST-Area0,CL-Residence,Resides in Area0,
INST-Area1,CL-Residence,Resides in Area1,
INST-Area2,CL-Residence,Resides in Area2,
INST-Health_Card_Yes,CL-Identification,Holds a health card,
INST-Government_ID_Yes,CL-Identification,Holds government ID,
INST-Sobriety_Required,CL-Program_Rules,Sobriety required,
INST-Curfew,CL-Program_Rules,Curfew applies,
INST-Trauma_Disclosure_Not_Required,CL-Program_Rules,Trauma history need not be disclosed,
INST-English,CL-Language,English,
INST-French,CL-Language,French,
INST-Counseling,CL-Health,Counseling,
INST-Addiction_Services,CL-Health,Addiction services,
INST-Pharmacy,CL-Health,Pharmaceutical services,
INST-Hospital_Stay,CL-Health,Hospital stay,
INST-Paid,CL-Cost,Paid,
INST-Sliding_Scale,CL-Cost,Sliding scale,
INST-Subsidy,CL-Cost,Through a subsidy,
INST-Transportation,CL-Personal,Transportation,
INST-Laundry,CL-Personal,Laundry,
INST-Temporary_Shelter,Shelter,Temporary shelter,
INST-Shelter,Shelter,Shelter,
INST-Housing,Shelter,Housing,
INST-Supportive_Housing,Shelter,Supportive housing,
INST-ID_Clinic,CL-Advocacy,ID clinic,
INST-Rent_Advocacy,CL-Advocacy,Rent negotiation advocacy,
INST-Referral,CL-Referral,Referral,
INST-Gradeschool,CL-Education,Grade school,
INST-Highschool,CL-Education,High school,
1_on_1_Coaching,CL-Education,One-on-one coaching,
INST-Educational_Workshops,CL-Education,Educational workshops,
INST-Job_Training,CL-Employment,Job training,
INST-Family_Mediation,CL-Relationships,Family mediation,
INST-Financial_Literacy,CL-Finance,Financial literacy,
INST-Clothing,CL-Goods,Clothing,
INST-Food_Bank,CL-Food,Food bank,
INST-Meal_Delivery,CL-Food,Meal delivery,
INST-Acquire_Housing,CL-Need_Acquire,Acquire housing,
INST-Acquire_Identification,CL-Need_Acquire,Acquire identification,
INST-Acquire_Food,CL-Need_Acquire,Acquire food,
INST-Improve_Housing,CL-Need_Improve,Improve housing situation,
INST-Reduce_Addiction,CL-Need_Improve,Reduce suffering from addiction,
INST-Improve_Health,CL-Need_Improve,Improve health,
INST-Improve_Employment,CL-Need_Improve,Improve employment,
)csv";
  return csv;
}

}  // namespace compass
