//! Seeded pseudo-random inputs for identity checks.
//!
//! All generators draw from [`rng`], a ChaCha8 stream seeded with a `u64`;
//! the ChaCha8 output sequence is fixed by its specification, so transcripts
//! are reproducible across platforms and releases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::seq::Seq;
use crate::yang::Octuple;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_terms` terms with exponents in `[-max_exp, max_exp]` and
/// coefficients in `[-max_coeff, max_coeff]`.
pub fn poly1(rng: &mut SampleRng, max_terms: usize, max_exp: i64, max_coeff: i64) -> LaurentPoly1 {
    let count = rng.gen_range(0..=max_terms);
    LaurentPoly1::from_terms(
        (0..count).map(|_| (rng.gen_range(-max_exp..=max_exp), rng.gen_range(-max_coeff..=max_coeff))),
    )
    .expect("small coefficients")
}

pub fn poly2(rng: &mut SampleRng, max_terms: usize, max_exp: i64, max_coeff: i64) -> LaurentPoly2 {
    let count = rng.gen_range(0..=max_terms);
    LaurentPoly2::from_terms((0..count).map(|_| {
        (
            (rng.gen_range(-max_exp..=max_exp), rng.gen_range(-max_exp..=max_exp)),
            rng.gen_range(-max_coeff..=max_coeff),
        )
    }))
    .expect("small coefficients")
}

pub fn pm1_seq(rng: &mut SampleRng, len: usize) -> Seq {
    Seq::new((0..len).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()).expect("len >= 1")
}

pub fn int_seq(rng: &mut SampleRng, len: usize, max_abs: i64) -> Seq {
    Seq::new((0..len).map(|_| rng.gen_range(-max_abs..=max_abs)).collect()).expect("len >= 1")
}

/// `+-1` octuple with `a..d` of one random length and `e..h` of another,
/// both in `1..=max_len`.
pub fn pm1_octuple(rng: &mut SampleRng, max_len: usize) -> Octuple {
    let n = rng.gen_range(1..=max_len);
    let m = rng.gen_range(1..=max_len);
    let x: [Seq; 4] = std::array::from_fn(|_| pm1_seq(rng, n));
    let [e, f, g, h]: [Seq; 4] = std::array::from_fn(|_| pm1_seq(rng, m));
    let [a, b, c, d] = x;
    Octuple { a, b, c, d, e, f, g, h }
}
