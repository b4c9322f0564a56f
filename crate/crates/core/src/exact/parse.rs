use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::FieldSpec;
use super::form::HomogeneousForm;
use super::monomial::{Monomial, VARIABLES};
use super::ExactError;

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> ExactError {
        ExactError::Parse {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.src[start..self.pos].parse().ok()
        }
    }
}

fn var_index(c: u8) -> Option<usize> {
    VARIABLES.iter().position(|&v| v as u8 == c)
}

/// Parses `term (('+'|'-') term)*` where a term is an optional integer
/// coefficient followed by variables with optional `^exponent`, `*` optional.
/// A leading sign is accepted. `"0"` is the zero form of degree 0.
pub fn parse_form(input: &str, field: FieldSpec) -> Result<HomogeneousForm, ExactError> {
    let mut cur = Cursor {
        src: input,
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    let mut sign = BigInt::one();
    match cur.peek() {
        Some(b'-') => {
            sign = -sign;
            cur.pos += 1;
        }
        Some(b'+') => cur.pos += 1,
        None => return Err(cur.err("empty expression")),
        _ => {}
    }
    loop {
        let (m, c) = parse_term(&mut cur)?;
        terms.push((m, BigRational::from_integer(sign * c)));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                sign = BigInt::one();
                cur.pos += 1;
            }
            Some(b'-') => {
                sign = -BigInt::one();
                cur.pos += 1;
            }
            Some(_) => return Err(cur.err("expected '+' or '-'")),
        }
    }
    let nonzero: Vec<_> = terms.iter().filter(|(_, c)| !c.is_zero()).collect();
    let degree = match nonzero.first() {
        Some((m, _)) => m.degree(),
        None => 0,
    };
    HomogeneousForm::from_terms(degree, field, terms.into_iter().filter(|(_, c)| !c.is_zero()))
        .map_err(|_| cur.err("form is not homogeneous"))
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(Monomial, BigInt), ExactError> {
    let coeff = cur.integer();
    let mut exps = [0u32; 4];
    let mut any_var = false;
    loop {
        let mut star = false;
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
            star = true;
        }
        let Some(c) = cur.peek() else {
            if star {
                return Err(cur.err("dangling '*'"));
            }
            break;
        };
        let Some(i) = var_index(c) else {
            if star {
                return Err(cur.err("expected a variable after '*'"));
            }
            break;
        };
        if star && !any_var && coeff.is_none() {
            return Err(cur.err("term cannot start with '*'"));
        }
        cur.pos += 1;
        let mut e = 1u32;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            let n = cur.integer().ok_or_else(|| cur.err("expected exponent"))?;
            e = u32::try_from(&n).map_err(|_| cur.err("exponent out of range"))?;
            if e == 0 {
                return Err(cur.err("exponent must be positive"));
            }
        }
        exps[i] += e;
        any_var = true;
    }
    if coeff.is_none() && !any_var {
        return Err(cur.err("expected a term"));
    }
    Ok((Monomial(exps), coeff.unwrap_or_else(BigInt::one)))
}
