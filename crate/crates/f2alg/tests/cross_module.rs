//! Cross-module agreement through the public API: the same objects built
//! by different modules must coincide as polynomial data.

use f2alg::ideal::{expand_q, QPolynomial};
use f2alg::invariants::dickson_upper_formula;
use f2alg::parity::{base_case_oracle, binom_parity};
use f2alg::poly::Monomial;
use f2alg::sw::{dual_image, witness_coefficient};

// The ideal's generators are defined by substituting ring variables into
// the triangular closed forms, so the untruncated expansion of a bare
// generator must reproduce the closed form monomial for monomial.
#[test]
fn ideal_generators_match_the_closed_forms() {
    for n in 2..=4u32 {
        for r in 0..n {
            let q = QPolynomial::parse(n, &format!("Q{r}")).unwrap();
            let expanded = expand_q(&q, None).unwrap();
            let closed = dickson_upper_formula(n, r).unwrap();
            assert_eq!(expanded, closed.poly, "generator Q{r} diverges at n={n}");
        }
    }
}

// In one variable the dual class lives in F2[f]/<f^d>, where each
// coefficient of the inverse power series is a binomial parity with a
// negated upper argument; the top coefficient is the m=1 oracle at r1=0.
#[test]
fn line_duals_match_binomial_parity() {
    for d in 2..=12u32 {
        for power in 1..=6u64 {
            let dual = dual_image(d, 1, power).unwrap();
            for deg in 0..d {
                let got =
                    witness_coefficient(&dual, &Monomial::from_pairs(1, &[(0, deg)])).unwrap();
                let want = binom_parity(-(power as i64), u64::from(deg)) == 1;
                assert_eq!(got, want, "coefficient mismatch at d={d} power={power} deg={deg}");
            }
            let top =
                witness_coefficient(&dual, &Monomial::from_pairs(1, &[(0, d - 1)])).unwrap();
            let oracle = base_case_oracle(d, power as i64, 0).unwrap() == 1;
            assert_eq!(top, oracle, "oracle disagrees at d={d} power={power}");
        }
    }
}
