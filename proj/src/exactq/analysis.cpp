#include "exactq/analysis.hpp"

#include "exactq/boolfun.hpp"
#include "exactq/formula.hpp"
#include "exactq/function_text.hpp"

namespace exactq {

nlohmann::ordered_json analyzeFunction(const TruthTable& f) {
  using Json = nlohmann::ordered_json;
  const unsigned n = f.arity();
  Json j;
  j["schema"] = kAnalysisSchema;
  j["function"] = formatFunction(f);
  j["arity"] = n;
  j["popcount"] = f.popcount();

  Json essential = Json::array();
  const auto vars = essentialVariables(f);
  for (Var v : vars) essential.push_back(v + 1);
  j["essentialVariables"] = essential;

  const auto profile = symmetricProfile(f);
  j["symmetric"] = profile.has_value();
  j["profile"] = profile ? Json(profile->toString()) : Json(nullptr);
  j["className"] = profile ? Json(symmetricClassName(*profile)) : Json(nullptr);
  j["monotone"] = isMonotone(f);

  if (n > kMaxReadOnceArity) {
    j["readOnce"] = nullptr;
  } else if (vars.size() < n) {
    j["readOnce"] = false;
  } else {
    const auto formula = recognizeReadOnce(f);
    j["readOnce"] = formula ? Json(formula->toString()) : Json(false);
  }

  if (n <= kMaxPolynomialArity) {
    const MultilinearPoly poly = multilinear(f);
    j["degree"] = poly.degree();
    j["polynomial"] = n <= 6 ? Json(poly.toString()) : Json(nullptr);
  } else {
    j["degree"] = nullptr;
    j["polynomial"] = nullptr;
  }
  j["decisionTreeDepth"] = n <= kMaxDepthArity ? Json(decisionTreeDepth(f)) : Json(nullptr);
  j["npnCanonical"] = n <= kMaxNpnArity ? Json(formatFunction(npnCanonical(f).table)) : Json(nullptr);
  j["andIsomorphic"] = isAndIsomorphic(f);
  return j;
}

}  // namespace exactq
