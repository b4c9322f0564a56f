use std::collections::HashMap;

use num_rational::BigRational;

use super::field::{denominator_lcm, inv_mod, mul_mod, reduce_mod};
use super::form::HomogeneousForm;
use super::monomial::{binom3, monomial_basis, monomial_index, Monomial};

/// Result of growing the degree-by-degree span of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanOutcome {
    /// The ideal contains every form of this degree.
    Full { degree: u32, dimension: usize },
    /// No full degree up to the bound; `rank` is the dimension reached there.
    Exhausted {
        d_max: u32,
        rank: usize,
        dimension: usize,
    },
}

/// Row echelon basis of the degree-`d` piece of a homogeneous ideal modulo `p`.
///
/// Columns are indexed by [`monomial_basis`], so the first nonzero entry of a
/// row is its leading monomial.
#[derive(Debug, Clone)]
pub struct GradedSpan {
    p: u64,
    degree: u32,
    basis: Vec<Monomial>,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
}

fn integer_images(g: &HomogeneousForm, p: u64) -> Vec<(Monomial, u64)> {
    let l = BigRational::from_integer(denominator_lcm(g.terms().map(|(_, c)| c)));
    g.terms()
        .map(|(m, c)| (*m, reduce_mod(&(c * &l), p)))
        .filter(|(_, v)| *v != 0)
        .collect()
}

impl GradedSpan {
    fn empty(p: u64, degree: u32) -> Self {
        let basis = monomial_basis(degree);
        let n = basis.len();
        GradedSpan {
            p,
            degree,
            basis,
            rows: Vec::new(),
            pivot_row: vec![None; n],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dimension()
    }

    fn leading(row: &[u64]) -> Option<usize> {
        row.iter().position(|&v| v != 0)
    }

    fn push_pivot(&mut self, mut row: Vec<u64>, lead: usize) {
        let inv = inv_mod(row[lead], self.p);
        for v in row[lead..].iter_mut() {
            if *v != 0 {
                *v = mul_mod(*v, inv, self.p);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
    }

    /// Reduces `row` against the current pivots and keeps it if anything
    /// survives. Returns whether the rank grew.
    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let p = self.p;
        let n = row.len();
        let mut c = 0;
        while c < n {
            if row[c] == 0 {
                c += 1;
                continue;
            }
            match self.pivot_row[c] {
                None => {
                    self.push_pivot(row, c);
                    return true;
                }
                Some(r) => {
                    let f = row[c];
                    let pr = &self.rows[r];
                    for j in c..n {
                        if pr[j] != 0 {
                            row[j] = (row[j] + p - mul_mod(f, pr[j], p)) % p;
                        }
                    }
                }
            }
            c += 1;
        }
        false
    }

    /// Inserts rows whose leading monomial is new first; they need no
    /// reduction. The rest are reduced afterwards. Stops once full.
    fn absorb(&mut self, rows: Vec<Vec<u64>>) {
        let mut deferred = Vec::new();
        for row in rows {
            if self.is_full() {
                return;
            }
            match Self::leading(&row) {
                None => {}
                Some(l) if self.pivot_row[l].is_none() => self.push_pivot(row, l),
                Some(_) => deferred.push(row),
            }
        }
        for row in deferred {
            if self.is_full() {
                return;
            }
            self.insert(row);
        }
    }

    fn dense(&self, terms: &[(Monomial, u64)], index: &HashMap<Monomial, usize>) -> Vec<u64> {
        let mut v = vec![0u64; self.basis.len()];
        for (m, c) in terms {
            let i = index[m];
            v[i] = (v[i] + c) % self.p;
        }
        v
    }

    /// The span in the next degree: variables times the current span plus
    /// the generators of that degree.
    fn next(&self, gens: &[Vec<(Monomial, u64)>], gen_degrees: &[u32]) -> Self {
        let mut out = GradedSpan::empty(self.p, self.degree + 1);
        let index = monomial_index(out.degree);
        let mut rows = Vec::with_capacity(4 * self.rows.len() + gens.len());
        for (g, &dg) in gens.iter().zip(gen_degrees) {
            if dg == out.degree {
                rows.push(out.dense(g, &index));
            }
        }
        for var in 0..4 {
            let x = Monomial::var(var);
            for r in &self.rows {
                let terms: Vec<(Monomial, u64)> = r
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(i, &v)| (self.basis[i].mul(&x), v))
                    .collect();
                rows.push(out.dense(&terms, &index));
            }
        }
        out.absorb(rows);
        out
    }

    /// Least degree `d <= d_max` at which the ideal generated by `gens`,
    /// reduced modulo `p`, contains all forms of degree `d`.
    pub fn first_full_degree(gens: &[HomogeneousForm], d_max: u32, p: u64) -> SpanOutcome {
        let images: Vec<Vec<(Monomial, u64)>> = gens.iter().map(|g| integer_images(g, p)).collect();
        let degrees: Vec<u32> = gens.iter().map(HomogeneousForm::degree).collect();
        let Some(d0) = gens
            .iter()
            .zip(&images)
            .filter(|(_, im)| !im.is_empty())
            .map(|(g, _)| g.degree())
            .min()
        else {
            return SpanOutcome::Exhausted {
                d_max,
                rank: 0,
                dimension: binom3(d_max as i64) as usize,
            };
        };
        if d0 > d_max {
            return SpanOutcome::Exhausted {
                d_max,
                rank: 0,
                dimension: binom3(d_max as i64) as usize,
            };
        }
        let mut span = GradedSpan::empty(p, d0);
        let index = monomial_index(d0);
        let seed: Vec<Vec<u64>> = images
            .iter()
            .zip(&degrees)
            .filter(|(_, &dg)| dg == d0)
            .map(|(g, _)| span.dense(g, &index))
            .collect();
        span.absorb(seed);
        loop {
            if span.is_full() {
                return SpanOutcome::Full {
                    degree: span.degree,
                    dimension: span.dimension(),
                };
            }
            if span.degree >= d_max {
                return SpanOutcome::Exhausted {
                    d_max,
                    rank: span.rank(),
                    dimension: span.dimension(),
                };
            }
            span = span.next(&images, &degrees);
        }
    }

    /// Rank modulo `p` of all products `monomial * g` of degree `d`, built
    /// directly without reusing lower degrees.
    pub fn direct_rank(gens: &[HomogeneousForm], d: u32, p: u64) -> (usize, usize) {
        let mut span = GradedSpan::empty(p, d);
        let index = monomial_index(d);
        let mut rows = Vec::new();
        for g in gens {
            if g.degree() > d {
                continue;
            }
            let im = integer_images(g, p);
            for m in monomial_basis(d - g.degree()) {
                let terms: Vec<(Monomial, u64)> = im.iter().map(|(t, c)| (t.mul(&m), *c)).collect();
                rows.push(span.dense(&terms, &index));
            }
        }
        for row in rows {
            span.insert(row);
        }
        (span.rank(), span.dimension())
    }
}
