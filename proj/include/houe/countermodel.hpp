#pragma once

#include <vector>

#include "houe/term.hpp"

namespace houe {

/// True when the closed first-order sentences have a model with at most
/// `max_domain` individuals. False when the search finds none, gives up, or
/// a sentence falls outside the fragment (metavariables, quantifiers or
/// arguments above individuals).
bool small_model_exists(const std::vector<Term>& sentences, int max_domain);

}  // namespace houe
