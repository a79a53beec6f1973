#pragma once

#include <json.hpp>
#include <string>

#include "nf/dynamics.hpp"
#include "nf/hopf.hpp"
#include "nf/normalform.hpp"
#include "nf/problem.hpp"

namespace nf {

// All output documents use ordered_json and map-ordered terms so that
// identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Polynomial <-> JSON coefficient map. Real polynomials only (everything the
// tool emits is real): [{"exps":[...2n...], "coeff":"a/b"}, ...].
Json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j, int n);

Json hopf_poly_to_json(const HopfPoly& h);

Json spec_to_json(const ProblemSpec& spec);

Json normal_form_document(const ProblemSpec& spec, const NormalFormResult& res);
Json hopf_document(const ProblemSpec& spec, const NormalFormResult& res, const HopfReport& report,
                   const std::map<int, Rational>* params = nullptr);

struct VerifyOutcome {
    EpsSeries residual;
    NormalFormConditionReport condition;
    bool ok() const { return residual.is_zero() && condition.ok(); }
};

Json verify_document(const ProblemSpec& spec, const VerifyOutcome& outcome);
Json dynamics_document(const ProblemSpec& spec, const ComparisonReport& report);

// Reads a NormalFormResult back from a normal-form output document
// (the "normal_form" and "generators" sections).
NormalFormResult normal_form_from_document(const nlohmann::json& doc, int n);

// Plain-text renderings of the same documents.
std::string normal_form_text(const ProblemSpec& spec, const NormalFormResult& res);
std::string hopf_text(const HopfReport& report);
std::string verify_text(const VerifyOutcome& outcome);
std::string dynamics_text(const ComparisonReport& report);

}  // namespace nf
