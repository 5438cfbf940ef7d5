#pragma once

#include "monoteq/poset.hpp"

namespace monoteq {
namespace patterns {

// The named small posets the classification decisions are built from.
// Element labels follow the conventional drawings: diamond a<{b,c}<d;
// bowtie {e,f}<{g,h}; Y-poset e<f<{g,h}; W-poset e<{f,g,h}.

Poset diamond();
Poset bowtie();
Poset y_poset();
Poset w_poset();

/// Diamond with one extra element hanging below a.
Poset s1();

/// Diamond with one extra element above c and one below c.
Poset s4_hat();

/// k-crown: a_1..a_k below b_1..b_k with a_i < b_j exactly when i != j.
Poset crown(int k);

Poset chain(int n);

}  // namespace patterns
}  // namespace monoteq
