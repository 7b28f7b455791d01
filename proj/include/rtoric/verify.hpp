#pragma once

#include <cstdint>
#include <span>

#include "rtoric/families.hpp"
#include "rtoric/report.hpp"

namespace rtoric {

std::uint64_t choose(int n, int k);

/// True iff every element's `plus` is its leading monomial under `order`.
bool leads_match_order(std::span<Binomial const> set, MatrixOrder const &order);

/// family_GX(params, i) is reduced for every i in 1..n.
bool all_orders_reduced(InstanceParams const &params);

/// The six binomials listed for n = 4 (three for J, three more for I).
std::vector<Binomial> printed_n4_generators(int a, int b);

// Each verifier returns one report whose claims all carry the verifier's name.
// Unmet preconditions (b < 2, gcd != 1, index out of range) yield refusals.

VerificationReport verify_lemma2(InstanceParams const &params, int max_index = 50);
VerificationReport verify_lemma3(InstanceParams const &params);
VerificationReport verify_prop_gb1(InstanceParams const &params, int i, BuchbergerOptions const &options = {});
VerificationReport verify_thm_gb2(InstanceParams const &params, int i, BuchbergerOptions const &options = {});
VerificationReport verify_cor_gb1(InstanceParams const &params);
VerificationReport verify_cor_gb2(InstanceParams const &params);
VerificationReport verify_example5(int a);
VerificationReport verify_example_n4_minors(int a, int b);
VerificationReport verify_example_gcd3();
VerificationReport verify_example_a3b3();

} // namespace rtoric
