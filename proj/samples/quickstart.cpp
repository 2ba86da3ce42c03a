// Copyright 2026 The resform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Computes the residue form of x^3 + y^3 + x*y^2 over F_7, its discriminant
// class, and checks the epsilon identity on a diagonal quadric.

#include <iostream>

#include "resform/resform.hpp"

int main() {
  using namespace resform;
  const Field k = Field::create(7, 1);
  const auto f = parse_poly("x^3 + y^3 + x*y^2", k, {"x", "y"});

  const auto g = gram_matrix(f, k.one());
  std::cout << "mu = " << g.basis.size() << "\n";
  for (const auto& row : g.matrix) {
    for (const auto& x : row) std::cout << ' ' << k.to_string(x);
    std::cout << '\n';
  }
  const auto cls = disc_square_class(g);
  std::cout << "disc = " << k.to_string(cls.representative) << (cls.legendre > 0 ? " (square)\n" : " (non-square)\n");

  const auto q = parse_poly("x^2 + 3*y^2 + 5*z^2", k, {"x", "y", "z"});
  const auto rep = verify_identity(q);
  std::cout << "epsilon: " << rep.geometric.value.to_string() << " vs "
            << rep.arithmetic->value.to_string() << " -> " << verdict_name(rep.verdict) << '\n';

  // Characteristic 2: the Arf invariant goes through a W_3 lift.
  const Field f2 = Field::create(2, 1);
  const auto arf = arf_invariant(parse_poly("x^2 + x*y + y^2", f2, {"x", "y"}));
  std::cout << "Arf(x^2 + xy + y^2) trace bit = " << arf.arf.trace_bit << '\n';
  return rep.verdict == Verdict::kPass ? 0 : 1;
}
