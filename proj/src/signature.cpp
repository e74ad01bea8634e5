#include "utt/signature.hpp"

namespace utt {

Prop telescope_hyps(const Telescope& tel) {
  Prop hyps;
  for (const auto& e : tel)
    if (const auto* h = std::get_if<PropHyp>(&e)) hyps = meet(hyps, h->prop);
  return hyps;
}

std::size_t telescope_vars(const Telescope& tel) {
  std::size_t n = 0;
  for (const auto& e : tel) n += std::holds_alternative<TermVar>(e);
  return n;
}

const std::string& declaration_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

bool is_hidden_prop_name(const std::string& name) { return name.starts_with("%abs."); }

}  // namespace utt
