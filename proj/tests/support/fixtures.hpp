#pragma once

#include <filesystem>
#include <string>

#include "ccswb/ast.hpp"
#include "ccswb/formula.hpp"
#include "ccswb/semantics.hpp"

namespace ccswb::testing {

std::filesystem::path corpus_dir();
const Model& bb84_model();
const Lts& bb84_lts();
const Lts& bb84p_lts();
const Lts& spec_lts();

// <<choose(0)>><<'keep(1)>>tt
Formula choose0_keep1_formula();

Lts lts_of(const std::string& model_text, const std::string& root);

}  // namespace ccswb::testing
