//! Modular arithmetic: the fixed Mersenne field F_p with p = 2^61 - 1 used by
//! the algebraic solver, and dynamic-modulus helpers (with a deterministic
//! Miller-Rabin test) used by the exact counting algorithms to sample random
//! 62-bit primes.

/// p = 2^61 - 1.
pub const MERSENNE61: u64 = (1 << 61) - 1;

/// An element of F_{2^61 - 1}, always kept in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Fp(u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn new(v: u64) -> Fp {
        Fp(v % MERSENNE61)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Folds a 122-bit product using 2^61 ≡ 1 (mod p).
    #[inline]
    fn reduce128(x: u128) -> u64 {
        let m = MERSENNE61 as u128;
        let folded = (x & m) + (x >> 61);
        let folded = (folded & m) + (folded >> 61);
        let v = folded as u64;
        if v >= MERSENNE61 {
            v - MERSENNE61
        } else {
            v
        }
    }

    pub fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= MERSENNE61 { s - MERSENNE61 } else { s })
    }

    pub fn sub(self, rhs: Fp) -> Fp {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            MERSENNE61 - rhs.0 + self.0
        })
    }

    pub fn neg(self) -> Fp {
        if self.0 == 0 {
            Fp(0)
        } else {
            Fp(MERSENNE61 - self.0)
        }
    }

    pub fn mul(self, rhs: Fp) -> Fp {
        Fp(Self::reduce128(self.0 as u128 * rhs.0 as u128))
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Fp {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(MERSENNE61 - 2)
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp::add(self, rhs)
    }
}
impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp::sub(self, rhs)
    }
}
impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp::mul(self, rhs)
    }
}

/// Determinant over F_p by Gaussian elimination with nonzero pivoting;
/// singular matrices give zero. `a` is row-major and is consumed.
pub fn determinant(mut a: Vec<Vec<Fp>>) -> Fp {
    let n = a.len();
    let mut det = Fp::ONE;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Fp::ZERO;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = det.neg();
        }
        let inv = a[col][col].inv();
        det = det.mul(a[col][col]);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(inv);
            for c in col..n {
                let sub = factor.mul(a[col][c]);
                a[r][c] = a[r][c].sub(sub);
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// dynamic moduli

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub fn powmod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12 smallest primes suffice as
/// witnesses below 2^64).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Samples a uniform-ish prime in [2^61, 2^62).
pub fn random_prime62(rng: &mut impl rand::Rng) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 61..1 << 62) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn field_axioms_spot_check() {
        assert!(is_prime(MERSENNE61));
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..200 {
            let a = Fp::new(rng.gen());
            let b = Fp::new(rng.gen());
            assert_eq!(a.add(b), b.add(a));
            assert_eq!(a.mul(b), b.mul(a));
            assert_eq!(a.sub(a), Fp::ZERO);
            if !a.is_zero() {
                assert_eq!(a.mul(a.inv()), Fp::ONE);
            }
            // cross-check against 128-bit reference arithmetic
            let want = (a.value() as u128 * b.value() as u128 % MERSENNE61 as u128) as u64;
            assert_eq!(a.mul(b).value(), want);
        }
    }

    #[test]
    fn determinant_cases() {
        let f = |v: u64| Fp::new(v);
        // singular all-ones
        let ones = vec![vec![f(1); 3]; 3];
        assert_eq!(determinant(ones), Fp::ZERO);
        // diagonal
        let diag = vec![vec![f(3), f(0)], vec![f(0), f(5)]];
        assert_eq!(determinant(diag), f(15));
        // 2x2 with known determinant 1*4 - 2*3 = -2
        let m = vec![vec![f(1), f(2)], vec![f(3), f(4)]];
        assert_eq!(determinant(m), f(2).neg());
        // empty matrix has determinant 1
        assert_eq!(determinant(Vec::new()), Fp::ONE);
    }

    #[test]
    fn miller_rabin_known_values() {
        for p in [2u64, 3, 61, 2147483647, MERSENNE61] {
            assert!(is_prime(p), "{p}");
        }
        for c in [1u64, 561, 2047, 4033, 1 << 61, (1 << 61) + 1] {
            assert!(!is_prime(c), "{c}");
        }
    }

    #[test]
    fn sampled_primes_are_prime_and_distinct() {
        let mut rng = StdRng::seed_from_u64(9);
        let p = random_prime62(&mut rng);
        let q = random_prime62(&mut rng);
        assert!(is_prime(p) && is_prime(q));
        assert!(p != q);
        assert!(p >= 1 << 61 && q < 1 << 62);
    }
}
