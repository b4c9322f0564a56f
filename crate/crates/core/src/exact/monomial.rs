use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Variable names in their fixed order `x > y > z > w`.
pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

/// A monomial `x^e0 y^e1 z^e2 w^e3`.
///
/// `Ord` is graded reverse lexicographic with `x > y > z > w`: higher total
/// degree wins; on a tie the monomial with the *smaller* exponent in the last
/// variable where they differ is larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exponents: [u32; 4]) -> Self {
        Monomial(exponents)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..4).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VARIABLES[i])?;
            } else {
                write!(f, "{}^{}", VARIABLES[i], e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d`, largest first in grevlex order.
/// The length is `C(d+3, 3)`.
pub fn monomial_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binom3(d as i64) as usize);
    for a in 0..=d {
        for b in 0..=(d - a) {
            for c in 0..=(d - a - b) {
                out.push(Monomial([a, b, c, d - a - b - c]));
            }
        }
    }
    out.sort_unstable_by(|p, q| q.cmp(p));
    out
}

/// Position of each monomial of degree `d` inside [`monomial_basis`].
pub fn monomial_index(d: u32) -> HashMap<Monomial, usize> {
    monomial_basis(d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// `C(d+3, 3)` for `d >= 0` and `0` otherwise.
pub fn binom3(d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let d = d as u64;
    (d + 1) * (d + 2) * (d + 3) / 6
}
