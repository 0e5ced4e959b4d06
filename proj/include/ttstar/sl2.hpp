#pragma once

#include <string>
#include <vector>

#include "ttstar/rational_matrix.hpp"

namespace ttstar {

// Finite-dimensional Lefschetz linear algebra: sl2 triples from a nilpotent
// degree-raising operator, weight filtrations, the exp(-a)exp(a+) lemma and
// the large-t transversality map.

struct GradedSpace {
    // degrees[i] = real cohomological degree of basis vector i (even, >= 0).
    std::vector<long> degrees;
    // Nilpotent raising operator (cup with the Kahler class); must map the
    // degree-d slice into the degree-(d+2) slice.
    RationalMatrix raising;

    long dim() const { return static_cast<long>(degrees.size()); }
    long top_degree() const;
    long middle() const { return top_degree() / 2; }  // n_v

    // Indices of basis vectors with degree d / degree <= d / degree >= d.
    std::vector<long> slice(long d) const;
    std::vector<long> slice_le(long d) const;
    std::vector<long> slice_ge(long d) const;

    void validate() const;  // degree compatibility + nilpotency

    // Truncated polynomial ring model of H*(P^n).
    static GradedSpace projective_space(long n);
    // Kunneth model of H*(P^1 x P^1) with raising by omega_1 + omega_2.
    static GradedSpace p1_times_p1();
};

struct Sl2Triple {
    RationalMatrix raising;   // a
    RationalMatrix lowering;  // a+
    RationalMatrix grading;   // h = deg - n_v
    // primitive-string bookkeeping: one entry per string
    struct String {
        long length;                         // k: string is p, a p, ..., a^k p
        std::vector<Rational> primitive;     // p in standard coordinates
    };
    std::vector<String> strings;
};

// Builds the triple via the primitive decomposition
//   a+ (a^l p) = l (k + 1 - l) a^{l-1} p,   p primitive with a^{k+1} p = 0,
// and verifies the commutation relations exactly.  Throws std::domain_error
// if hard Lefschetz fails for (V, a).
Sl2Triple lefschetz_triple(const GradedSpace& v);

struct WeightFiltration {
    // one entry per Jordan-string vector: its weight and coordinates
    std::vector<long> weights;
    std::vector<std::vector<Rational>> vectors;

    long max_weight() const;
    long dim_w(long k) const;  // dim W_k
    // basis of W_k as columns
    RationalMatrix w_basis(long k) const;
};

// Weight filtration of a nilpotent operator: the unique increasing
// filtration with N W_k \subset W_{k-2} and N^k : Gr_k ~ Gr_{-k}.
// Throws std::domain_error on non-nilpotent input.
WeightFiltration weight_filtration(const RationalMatrix& nilpotent);

// span{columns of A} == span{columns of B}, exactly.
bool same_span(const RationalMatrix& a, const RationalMatrix& b);

// Exact exp of a nilpotent matrix.
RationalMatrix exp_nilpotent(const RationalMatrix& n);

struct ExpLemmaReport {
    bool ok = true;
    std::vector<std::string> failures;
    long cases_checked = 0;
};

// For E = exp(-a) exp(a+): checks that E sends H^{>=n-k} onto H^{<=n+k}
// isomorphically for every k, and that for u = a^j p (p primitive,
// u in H^{n-k}) the top-degree part of E u equals
// (-1)^{k+j} (j! / (k+j)!) a^k u, exactly.
ExpLemmaReport exp_lemma_check(const GradedSpace& v);

struct TransversalityCase {
    long k;
    Rational t;
    bool full_rank;
    long intersection_dim;
    long expected_dim;
};

struct TransversalityReport {
    std::vector<TransversalityCase> cases;
    bool limit_ok;            // the rescaled t = infinity map is invertible
    bool full_rank_large_t;   // the largest tested t passes for every k
    bool all_full_rank;       // every tested (k, t) passes
};

// Rank of H^{<= n-k} \cap e^{2 t a} kappa(H^{<= n+k}) -> H^{n-k} for each
// requested t and each k >= 0 with H^{n-k} nonzero.  kappa is a
// degree-compatible involution model given by its matrix (rational models;
// conjugation acts trivially on real rational data).
TransversalityReport transversality_rank(const GradedSpace& v, const RationalMatrix& kappa,
                                         const std::vector<Rational>& ts);

// Built-in involution models.
// Leading-term model: (-1)^{deg/2} on each slice.
RationalMatrix kappa_diag_model(const GradedSpace& v);
// Leading term plus degree-raising perturbation entries of the given size.
RationalMatrix kappa_perturbed_model(const GradedSpace& v, const Rational& eps);

}  // namespace ttstar
