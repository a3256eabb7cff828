//! Seeded matrix generators for verification campaigns.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pfkit::{
    generic_matrix, generic_skew, random_scalar, skew_from_upper, Matrix, Ring, Scalar, SkewMatrix,
};

/// The generator of one check within one trial. Streams keep the inputs of a
/// check independent of which other checks run alongside it.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Strict upper triangle drawn entrywise, the rest filled in by skew-symmetry.
pub fn random_skew<R: Rng + ?Sized>(ring: Ring, dim: usize, bound: u64, rng: &mut R) -> SkewMatrix {
    let upper = (0..dim * dim.saturating_sub(1) / 2)
        .map(|_| random_scalar(ring, rng, bound))
        .collect();
    skew_from_upper(ring, dim, upper).expect("upper triangle has the right length")
}

pub fn random_square<R: Rng + ?Sized>(ring: Ring, n: usize, bound: u64, rng: &mut R) -> Matrix {
    Matrix::from_fn(ring, n, n, |_, _| random_scalar(ring, rng, bound))
}

/// Where the inputs of a check come from.
#[derive(Debug, Clone)]
pub enum Source {
    Random { ring: Ring, bound: u64 },
    Symbolic,
}

impl Source {
    pub fn ring(&self) -> Ring {
        match self {
            Source::Random { ring, .. } => *ring,
            Source::Symbolic => Ring::Poly,
        }
    }

    pub fn skew<R: Rng + ?Sized>(&self, dim: usize, prefix: &str, rng: &mut R) -> SkewMatrix {
        match self {
            Source::Random { ring, bound } => random_skew(*ring, dim, *bound, rng),
            Source::Symbolic => generic_skew(dim, prefix),
        }
    }

    pub fn square<R: Rng + ?Sized>(&self, n: usize, prefix: &str, rng: &mut R) -> Matrix {
        match self {
            Source::Random { ring, bound } => random_square(*ring, n, *bound, rng),
            Source::Symbolic => generic_matrix(n, n, prefix),
        }
    }

    pub fn scalar<R: Rng + ?Sized>(&self, name: &str, rng: &mut R) -> Scalar {
        match self {
            Source::Random { ring, bound } => random_scalar(*ring, rng, *bound),
            Source::Symbolic => Scalar::var(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_matrix() {
        let a = random_skew(Ring::Int, 6, 5, &mut trial_rng(42, 3));
        let b = random_skew(Ring::Int, 6, 5, &mut trial_rng(42, 3));
        let c = random_skew(Ring::Int, 6, 5, &mut trial_rng(42, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn entries_respect_the_bound() {
        let a = random_skew(Ring::Int, 8, 2, &mut trial_rng(1, 0));
        for x in a.as_matrix().entries() {
            let v: i64 = x.to_string().parse().unwrap();
            assert!((-2..=2).contains(&v));
        }
    }
}
