#pragma once

#include <gz/hessenberg.hpp>
#include <gz/moment.hpp>
#include <gz/solution.hpp>

#include <set>
#include <utility>
#include <vector>

namespace gz {

struct ChoiceEntry {
    Scalar root;
    UL choice = UL::Lower;
};

/// The complete A-orbit invariant in a fibre: per level i = 1..n-1 an
/// Upper/Lower label per common root of the adjacent level spectra.
struct ChoiceVector {
    std::vector<std::vector<ChoiceEntry>> levels;

    int label_count() const;
};

/// Nilfibre orbit label (a_1, ..., a_{n-1}).
struct NilChoice {
    std::vector<UL> labels;
};

/// Permutation of {1..n}, stored 0-based.
class Permutation {
public:
    explicit Permutation(int n);
    /// Long element of S_{k+1} embedded in S_n: reverses 1..k+1.
    static Permutation long_element(int k, int n);

    int n() const { return int(map_.size()); }
    int apply(int x) const { return map_.at(size_t(x)); }
    bool is_identity() const;

    /// (a.then_after(b))(x) = a(b(x)); b acts first.
    static Permutation compose(const Permutation& a, const Permutation& b);

    std::vector<int> one_line() const; // 1-based values

    bool operator==(const Permutation& o) const { return map_ == o.map_; }

private:
    std::vector<int> map_;
};

struct FiberClass {
    enum class Tag { Omega, ThetaOnly, Degenerate };
    std::vector<int> j; // per level 1..n-1
    Tag tag = Tag::Degenerate;

    int total_j() const;
};

/// Common roots between level i and level i+1 of the fibre label, in
/// decreasing lexicographic order.  Exact mode decides membership of the
/// upper level by exact evaluation, so the top-level polynomial never
/// needs to split.
std::vector<Scalar> level_common_roots(const GZSpec& c, int i, const ToleranceContext& ctx = {});

FiberClass fiber_class(const GZSpec& c, const ToleranceContext& ctx = {});

/// Number of A-orbits in the strongly regular fibre: 2^{sum j_i}.
mpz_class orbit_count(const GZSpec& c, const ToleranceContext& ctx = {});

/// One strongly regular representative of the orbit labelled by v,
/// built from the per-level solution points and their Jordanizing
/// conjugations.
Mat orbit_representative(const GZSpec& c, const ChoiceVector& v, const ToleranceContext& ctx = {});

/// The orbit invariant of a strongly regular matrix.
ChoiceVector classify(const Mat& x, const ToleranceContext& ctx = {});

/// Free positions of the nilradical attached to a nilfibre orbit label,
/// built cutoff by cutoff (1-based (row, column) pairs).
std::set<std::pair<int, int>> nil_pattern(const NilChoice& v);

/// The permutation conjugating the strictly lower triangular matrices
/// onto nil_pattern(v).
Permutation nil_permutation(const NilChoice& v);

/// All 2^{sum j_i} choice vectors with representatives, lexicographic in
/// the labels (U < L), levels ascending.
std::vector<std::pair<ChoiceVector, Mat>> enumerate_orbits(const GZSpec& c,
                                                           const ToleranceContext& ctx = {});

/// All choice vectors of the fibre in enumeration order, without
/// building representatives.
std::vector<ChoiceVector> enumerate_choices(const GZSpec& c, const ToleranceContext& ctx = {});

bool choice_vectors_equal(const ChoiceVector& a, const ChoiceVector& b, const ToleranceContext& ctx = {});

} // namespace gz
