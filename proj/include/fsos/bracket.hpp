// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_BRACKET_HPP
#define FSOS_BRACKET_HPP

#include "fsos/params.hpp"

namespace fsos {

// Theta symbol  [u]^{(s)} = x^{u^2/s - u} Theta_{x^{2s}}(x^{2u}).
// [u] = [u]^{(r)} uses nome p = x^{2r}; the starred symbol uses s = r - k.
// Entire in u; odd, [-u] = -[u]; quasi-periodic, [u+s] = -[u].
Cplx bracket_s(Cplx u, double s, const ModelParams& P);
Cplx bracket(Cplx u, const ModelParams& P);
Cplx bracket_star(Cplx u, const ModelParams& P);

// Falling factorial [A]_M = [A][A-1]...[A-M+1], M >= 0.
Cplx bracket_falling(Cplx A, int M, const ModelParams& P);

// Range product [A, B] = [A][A+1]...[B] for integer B-A >= -1 ([A, A-1] = 1).
Cplx bracket_range(Cplx A, int len, const ModelParams& P);  // len = B-A+1 factors

// Binomial [A; B] = [A]_B / [B]_B, integer B >= 0.
Cplx bracket_binom(Cplx A, int B, const ModelParams& P);

// How square roots of bracket products are taken.  Joint evaluates
// sqrt([a][b]) with a single principal square root; Split uses
// sqrt([a]) sqrt([b]), each principal.  They differ (by a sign) once
// brackets go negative; identity suites calibrate which one the weight
// normalizations require and record the choice.
enum class SqrtMode { Joint, Split };

// Pairing symbol
//   (a,b)_M = [M; (a-b+M)/2]^{-1} [ (a+b-M)/2, (a+b+M)/2 ] / sqrt([a][b]),
// symmetric in (a,b); requires (a-b+M)/2 to be an integer in [0, M].
Cplx bracket_pairing(double a, double b, int M, const ModelParams& P,
                     SqrtMode mode = SqrtMode::Joint);

// Principal square root of [a] (Split mode helper).
Cplx bracket_sqrt(double a, const ModelParams& P);

}  // namespace fsos

#endif
