#pragma once

// Quadratic and biquadratic extensions of K as lines and planes in K/℘(K),
// their upper ramification breaks, the Hasse–Herbrand conversion to lower
// numbering, and exhaustive counts.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "aschar/artin_schreier.hpp"
#include "aschar/rational.hpp"

namespace aschar {

// Hard cap on the F_2-dimension of any enumerated space.
inline constexpr int kMaxAmbientDim = 20;
// Planes are enumerated one by one; these bound the work (counting) and the
// size of materialized lists.
inline constexpr std::uint64_t kMaxPlanesCounted = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kMaxPlanesListed = std::uint64_t{1} << 18;

// L = K(℘^{-1}(D)) for the line D spanned by gen.
class ExtLine {
 public:
  explicit ExtLine(CosetRep gen);  // ZeroCoset for gen = 0
  const CosetRep& gen() const { return gen_; }

 private:
  CosetRep gen_;
};

// L = K(℘^{-1}(W)) for the plane W spanned by two independent classes.
class ExtPlane {
 public:
  ExtPlane(CosetRep a, CosetRep b);  // PreconditionViolated if dependent
  const CosetRep& first() const { return a_; }
  const CosetRep& second() const { return b_; }
  // The three nonzero elements a, b, a+b.
  std::vector<CosetRep> nonzero_elements() const;
  // Same plane, basis in reduced echelon form.
  ExtPlane canonical() const;

 private:
  CosetRep a_, b_;
};

struct QuadUnramified {
  bool operator==(const QuadUnramified&) const = default;
};
struct QuadRamified {
  int t;
  bool operator==(const QuadRamified&) const = default;
};
struct Case1 {  // upper breaks -1 and t
  int t;
  bool operator==(const Case1&) const = default;
};
struct Case21 {  // single upper break t, Galois group jumps by 4
  int t;
  bool operator==(const Case21&) const = default;
};
struct Case22 {  // upper breaks t1 < t2
  int t1, t2;
  bool operator==(const Case22&) const = default;
};
using BreakProfile = std::variant<QuadUnramified, QuadRamified, Case1, Case21, Case22>;

// Throws PreconditionViolated unless every positive break is odd and ordered.
void validate(const BreakProfile& p);
std::string case_name(const BreakProfile& p);
std::vector<int> upper_breaks(const BreakProfile& p);

// Smallest m with rep ∈ V_m: max 2n+1 over the wild part, 0 if unramified.
int level(const CosetRep& rep);

BreakProfile quad_breaks(const ExtLine& line);
BreakProfile biquad_profile(const ExtPlane& plane);

// Highest upper break.
Rational depth_from_profile(const BreakProfile& p);

struct LowerBreak {
  Rational lower;
  int order;  // |G_lower|
  bool operator==(const LowerBreak&) const = default;
};
// Lower numbering through ψ(u) = ∫_0^u (G^0 : G^w) dw.
std::vector<LowerBreak> upper_to_lower(const BreakProfile& p);

enum class CountMethod { ClosedForm, Enumeration };
struct CountResult {
  std::int64_t count;
  CountMethod method;
};

// Number of biquadratic extensions with the given profile (Case1, Case21 or
// Case22). Case 1 uses 2^{dim V_t - 1} - 2^{dim V_{t-1} - 1}; the other
// cases enumerate all planes of V_{t_max}.
CountResult count_biquadratic(const BreakProfile& profile, int f);
std::int64_t count_biquadratic_by_enumeration(const BreakProfile& profile, int f);
std::int64_t count_case1_closed_form(int t, int f);

struct Extension {
  std::variant<ExtLine, ExtPlane> ext;
  BreakProfile profile;
};

enum class ExtensionKind { Quadratic, Biquadratic };

// One representative per subspace of V_{max_break}, in canonical form,
// sorted by coordinates.
std::vector<Extension> enumerate_extensions(ExtensionKind kind, int max_break, BasisPtr basis);

}  // namespace aschar
