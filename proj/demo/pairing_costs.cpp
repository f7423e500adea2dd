// Copyright 2026 The ctbls Authors.
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

// Where the work in one pairing goes, and what it costs at different CIOS
// word sizes.

#include <cstdio>

#include "ctbls/pairing.hpp"

int main() {
  using namespace ctbls;
  const G1Point& p = G1Point::generator();
  const G2Point& q = G2Point::generator();

  for (unsigned w : {16u, 32u, 64u}) {
    Engine engine(w);
    EngineScope scope(engine);
    Measurement ml;
    const Fp12 f = miller_loop(p, q);
    const OpCounter a = ml.delta();
    Measurement fe;
    const Gt e = final_exp(f);
    const OpCounter b = fe.delta();
    std::printf("w=%-2u  miller %5llu  final-exp %5llu  word muls %9llu  (e != 1: %s)\n",
                w, static_cast<unsigned long long>(a.m1_equivalent()),
                static_cast<unsigned long long>(b.m1_equivalent()),
                static_cast<unsigned long long>(a.word_mul + b.word_mul),
                e.is_one() ? "no" : "yes");
  }
  return 0;
}
