#pragma once

#include "racah/algebra.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace racah {

/// Catalog coordinates of one module: family R/E/O, dimension parameter d,
/// rational parameters a, b, c and a twist (families E and O only).
struct ModuleSpec {
    Family family;
    int d = 0;
    Rat a, b, c;
    std::pair<int, int> eps{1, 1};
};

/// Text form "E:d=3,a=2,b=3,c=7,eps=+-" with eps one of ++, +-, -+, --.
/// Parameters accept "p/q" rationals. eps is optional and invalid for R.
ModuleSpec parse_module_spec(std::string_view s);
std::string to_string(const ModuleSpec& spec);

struct DerivedParams {
    Rat sigma, tau, lambda, mu, nu;
    std::map<int, Rat> rho; // odd i in 1..d
};

DerivedParams derived_params(int d, const Rat& a, const Rat& b, const Rat& c);

/// (d+1)-dimensional module with A lower-bidiagonal, B upper-bidiagonal and
/// C = delta - A - B acting by the family's scalar delta.
RacahRep build_R(int d, const Rat& a, const Rat& b, const Rat& c);

/// (d+1)-dimensional four-generator module, d odd.
HRep build_E(int d, const Rat& a, const Rat& b, const Rat& c);

/// (d+1)-dimensional four-generator module, d even.
HRep build_O(int d, const Rat& a, const Rat& b, const Rat& c);

/// Generator permutation for the Klein four-group action:
///   (1,-1): t0<->t1, t0v<->t1v
///   (-1,1): t0<->t0v, t1<->t1v
///   (-1,-1): t0<->t1v, t1<->t0v
HRep twist(const HRep& h, std::pair<int, int> eps);

/// Builds the twisted module of an E/O spec. Throws for family R.
HRep build_h_module(const ModuleSpec& spec);

/// Exact forbidden-set membership test of the matching family criterion.
/// Twist-invariant for families E and O.
bool irreducibility_criterion(const ModuleSpec& spec);

/// Scalars of t0^2, t1^2, t0v^2, t1v^2 on the built module, permuted to
/// match the spec's twist. Families E and O only.
std::array<Rat, 4> central_scalars(const ModuleSpec& spec);

/// Scalar of delta = A+B+C on R_d(a,b,c):
/// (d/2)(d/2+1) + a(a+1) + b(b+1) + c(c+1).
Rat r_delta_scalar(int d, const Rat& a, const Rat& b, const Rat& c);

} // namespace racah
