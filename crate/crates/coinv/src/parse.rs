//! Text syntax for polynomials: variables `x{i}_{j}` (with `x{i}` as an
//! alias for `x{i}_1` when m = 1), `^` for powers, `*` explicit or implied,
//! integer or rational coefficients. Example: `3*x1_1^2*x2_2 - 1/2*x3_1`.

use crate::field::Field;
use crate::monomial::{Dims, Monomial, VarId};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at byte {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("variable x{i}_{j} outside the ({n}, {m}) grid")]
    VarOutOfRange { i: usize, j: usize, n: usize, m: usize },
    #[error("bare alias x{0} is only valid when m = 1")]
    BareAliasNeedsSingleCopy(usize),
    #[error("zero denominator at byte {0}")]
    ZeroDenominator(usize),
    #[error("exponent at byte {0} does not fit in 32 bits")]
    ExponentOverflow(usize),
    #[error("no variables found; cannot infer dimensions")]
    NoVariables,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    // (i, j, bare): `x3` parses as (3, 1, true), `x3_2` as (3, 2, false).
    Var(usize, usize, bool),
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' => pos += 1,
            '^' => {
                out.push((Token::Caret, pos));
                pos += 1;
            }
            '*' => {
                out.push((Token::Star, pos));
                pos += 1;
            }
            '+' => {
                out.push((Token::Plus, pos));
                pos += 1;
            }
            '-' => {
                out.push((Token::Minus, pos));
                pos += 1;
            }
            '/' => {
                out.push((Token::Slash, pos));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &input[start..pos];
                out.push((Token::Int(digits.parse().expect("digits")), start));
            }
            'x' => {
                let start = pos;
                pos += 1;
                let i = read_index(input, &mut pos).ok_or(ParseError::Expected {
                    expected: "variable index after `x`",
                    at: start,
                })?;
                if pos < bytes.len() && bytes[pos] == b'_' {
                    pos += 1;
                    let j = read_index(input, &mut pos).ok_or(ParseError::Expected {
                        expected: "copy index after `_`",
                        at: pos,
                    })?;
                    out.push((Token::Var(i, j, false), start));
                } else {
                    out.push((Token::Var(i, 1, true), start));
                }
            }
            other => return Err(ParseError::UnexpectedChar(other, pos)),
        }
    }
    Ok(out)
}

fn read_index(input: &str, pos: &mut usize) -> Option<usize> {
    let bytes = input.as_bytes();
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    input[start..*pos].parse().ok().filter(|&i| i >= 1)
}

/// Scans expressions for the variables they mention and returns the smallest
/// grid containing all of them. `x{i}` counts as copy 1.
pub fn infer_dims(inputs: &[&str]) -> Result<Dims, ParseError> {
    let mut n = 0;
    let mut m = 0;
    for input in inputs {
        for (tok, _) in tokenize(input)? {
            if let Token::Var(i, j, _) = tok {
                n = n.max(i);
                m = m.max(j);
            }
        }
    }
    if n == 0 {
        return Err(ParseError::NoVariables);
    }
    Ok(Dims::new(n, m))
}

struct Parser<'a, F: Field> {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    dims: Dims,
    field: &'a F,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|&(_, p)| p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(t, _)| t.clone());
        self.cursor += 1;
        t
    }

    fn parse_poly(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = Polynomial::zero(self.field.clone(), self.dims);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(ParseError::UnexpectedEnd),
                None => break,
                Some(Token::Plus) => {
                    self.bump();
                    false
                }
                Some(Token::Minus) => {
                    self.bump();
                    true
                }
                Some(_) if first => false,
                Some(_) => {
                    return Err(ParseError::Expected {
                        expected: "`+` or `-` between terms",
                        at: self.at(),
                    })
                }
            };
            first = false;
            let term = self.parse_term()?;
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        }
        Ok(acc)
    }

    /// term := factor (`*`? factor)*
    fn parse_term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f);
                }
                Some(Token::Int(_)) | Some(Token::Var(..)) => {
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// factor := integer (`/` integer)? | variable (`^` integer)?
    fn parse_factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let at = self.at();
        match self.bump() {
            Some(Token::Int(numer)) => {
                let mut c = self.field.from_bigint(&numer);
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let den_at = self.at();
                    match self.bump() {
                        Some(Token::Int(denom)) => {
                            let d = self.field.from_bigint(&denom);
                            c = self
                                .field
                                .div(&c, &d)
                                .ok_or(ParseError::ZeroDenominator(den_at))?;
                        }
                        _ => {
                            return Err(ParseError::Expected {
                                expected: "denominator",
                                at: den_at,
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(self.field.clone(), self.dims, c))
            }
            Some(Token::Var(i, j, bare)) => {
                if bare && self.dims.m != 1 {
                    return Err(ParseError::BareAliasNeedsSingleCopy(i));
                }
                if i > self.dims.n || j > self.dims.m {
                    return Err(ParseError::VarOutOfRange {
                        i,
                        j,
                        n: self.dims.n,
                        m: self.dims.m,
                    });
                }
                let mut e = 1u32;
                if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    let exp_at = self.at();
                    match self.bump() {
                        Some(Token::Int(big)) => {
                            e = u32::try_from(&big)
                                .map_err(|_| ParseError::ExponentOverflow(exp_at))?;
                        }
                        _ => {
                            return Err(ParseError::Expected {
                                expected: "exponent",
                                at: exp_at,
                            })
                        }
                    }
                }
                Ok(Polynomial::from_monomial(
                    self.field.clone(),
                    Monomial::var_pow(self.dims, VarId::new(i, j), e),
                    self.field.one(),
                ))
            }
            Some(_) => Err(ParseError::Expected {
                expected: "coefficient or variable",
                at,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses one polynomial over the given grid and field.
pub fn parse_polynomial<F: Field>(
    input: &str,
    dims: Dims,
    field: &F,
) -> Result<Polynomial<F>, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        dims,
        field,
    };
    parser.parse_poly()
}

/// Parses a batch of expressions over their jointly inferred grid.
pub fn parse_system<F: Field>(
    inputs: &[&str],
    field: &F,
) -> Result<(Dims, Vec<Polynomial<F>>), ParseError> {
    let dims = infer_dims(inputs)?;
    let polys = inputs
        .iter()
        .map(|s| parse_polynomial(s, dims, field))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((dims, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn parses_the_reference_expression() {
        let dims = Dims::new(3, 2);
        let f = parse_polynomial("3*x1_1^2*x2_2 - 1/2*x3_1", dims, &Rationals).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "3*x1_1^2*x2_2 - 1/2*x3_1");
    }

    #[test]
    fn display_parse_round_trip() {
        let dims = Dims::new(2, 2);
        let f = parse_polynomial("x1_1*x2_2 + x1_2*x2_1 - 7", dims, &Rationals).unwrap();
        let again = parse_polynomial(&f.to_string(), dims, &Rationals).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn bare_alias_only_for_single_copy() {
        let f = parse_polynomial("x1^2 + 2x2", Dims::new(2, 1), &Rationals).unwrap();
        assert_eq!(f.to_string(), "x1^2 + 2*x2");
        let err = parse_polynomial("x1 + x2_2", Dims::new(2, 2), &Rationals).unwrap_err();
        assert_eq!(err, ParseError::BareAliasNeedsSingleCopy(1));
    }

    #[test]
    fn rejects_out_of_range_variables() {
        let err = parse_polynomial("x4", Dims::new(3, 1), &Rationals).unwrap_err();
        assert!(matches!(err, ParseError::VarOutOfRange { i: 4, .. }));
    }

    #[test]
    fn infers_dims_across_a_system() {
        let dims = infer_dims(&["x1_1 + x2_1", "x3_2^4"]).unwrap();
        assert_eq!(dims, Dims::new(3, 2));
        assert_eq!(infer_dims(&["5"]), Err(ParseError::NoVariables));
    }

    #[test]
    fn parses_over_prime_fields() {
        let f5 = PrimeField::new(5).unwrap();
        let f = parse_polynomial("7*x1 + 3/2*x2", Dims::new(2, 1), &f5).unwrap();
        // 7 = 2 and 3/2 = 3 * 3 = 4 in F_5.
        assert_eq!(f.to_string(), "2*x1 + 4*x2");
        let err = parse_polynomial("1/5*x1", Dims::new(2, 1), &f5).unwrap_err();
        assert!(matches!(err, ParseError::ZeroDenominator(_)));
    }

    #[test]
    fn implicit_multiplication_and_signs() {
        let dims = Dims::new(2, 1);
        let f = parse_polynomial("-x1 + 2 x1 x2", dims, &Rationals).unwrap();
        assert_eq!(f.to_string(), "2*x1*x2 - x1");
    }
}
