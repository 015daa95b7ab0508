#include "support/fixtures.hpp"

#include "ccswb/corpus.hpp"
#include "ccswb/parser.hpp"

namespace ccswb::testing {

std::filesystem::path corpus_dir() { return CCSWB_CORPUS_DIR; }

const Model& bb84_model() {
  static const Model model = parse_model(read_text_file(corpus_dir() / "bb84.ccs"));
  return model;
}

const Lts& bb84_lts() {
  static const Lts lts = build_lts(bb84_model(), "BB84");
  return lts;
}

const Lts& bb84p_lts() {
  static const Lts lts = build_lts(bb84_model(), "BB84p");
  return lts;
}

const Lts& spec_lts() {
  static const Lts lts = build_lts(bb84_model(), "Spec");
  return lts;
}

Formula choose0_keep1_formula() {
  return Formula::weak_diamond(
      LabelPattern::exact(GroundLabel::input("choose", {Value::Zero})),
      Formula::weak_diamond(LabelPattern::exact(GroundLabel::output("keep", {Value::One})),
                            Formula::tt()));
}

Lts lts_of(const std::string& model_text, const std::string& root) {
  return build_lts(parse_model(model_text), root);
}

}  // namespace ccswb::testing
