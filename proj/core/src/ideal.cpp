#include "nsatz/ideal.hpp"

#include "nsatz/errors.hpp"
#include "nsatz/parse.hpp"

namespace nsatz {

void validate_ideal(const Ideal& ideal) {
  if (!ideal.ctx) throw domain_error("ideal without variable context");
  for (const Poly& g : ideal.gens) {
    if (g.is_zero()) throw domain_error("zero generator in ideal");
    if (g.ctx() != ideal.ctx && (!g.ctx() || !(*g.ctx() == *ideal.ctx)))
      throw domain_error("generator context mismatch");
  }
}

Ideal ideal_from_strings(const CtxPtr& ctx, const std::vector<std::string>& texts) {
  Ideal ideal;
  ideal.ctx = ctx;
  for (const std::string& t : texts) ideal.gens.push_back(parse(t, ctx));
  validate_ideal(ideal);
  return ideal;
}

}  // namespace nsatz
