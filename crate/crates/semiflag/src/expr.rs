//! Text forms: the word-expression grammar for algebra elements, weight
//! lists, and affine group elements, plus canonical printing.

use crate::daha::{Letter, Word};
use crate::exactalg::LatticePoly;
use crate::rootdata::{ExtAffineElt, RootSystem, WeylTable};
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.fail(&format!("expected '{}'", b as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn parse_uint(&mut self) -> Result<i64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.fail("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn parse_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        self.skip_ws();
        let n = self.parse_uint()?;
        Ok(if neg { -n } else { n })
    }
}

/// A coefficient literal or a generator letter.
enum Atom {
    Coeff(LatticePoly),
    Gen(Letter),
}

struct ExprParser<'a> {
    cur: Cursor<'a>,
    rank: usize,
    two_e: i64,
}

impl<'a> ExprParser<'a> {
    /// Bracketed weight: signed combination of w1..wn tokens, or 0.
    fn parse_weight(&mut self) -> Result<Vec<i64>> {
        self.cur.expect(b'[')?;
        let mut out = vec![0i64; self.rank];
        loop {
            self.cur.skip_ws();
            let sign = if self.cur.eat(b'-') {
                -1
            } else {
                self.cur.eat(b'+');
                1
            };
            self.cur.skip_ws();
            let coeff = if matches!(self.cur.peek(), Some(b) if b.is_ascii_digit()) {
                self.cur.parse_uint()?
            } else {
                1
            };
            self.cur.skip_ws();
            if self.cur.eat(b'w') {
                let idx = self.cur.parse_uint()? as usize;
                if idx == 0 || idx > self.rank {
                    return self
                        .cur
                        .fail(&format!("weight index {idx} out of range 1..={}", self.rank));
                }
                out[idx - 1] += sign * coeff;
            } else if coeff == 0 {
                // a bare 0 names the zero weight
            } else {
                return self.cur.fail("expected a weight token like w1 or 0");
            }
            self.cur.skip_ws();
            match self.cur.peek() {
                Some(b']') => {
                    self.cur.pos += 1;
                    return Ok(out);
                }
                Some(b'+') | Some(b'-') => continue,
                _ => return self.cur.fail("expected '+', '-', or ']' in a weight"),
            }
        }
    }

    fn parse_node(&mut self, max: usize) -> Result<usize> {
        self.cur.expect(b'[')?;
        self.cur.skip_ws();
        let i = self.cur.parse_uint()? as usize;
        self.cur.skip_ws();
        self.cur.expect(b']')?;
        if i > max {
            return self
                .cur
                .fail(&format!("generator index {i} out of range 0..={max}"));
        }
        Ok(i)
    }

    fn parse_center_power(&mut self) -> Result<i64> {
        self.cur.expect(b'[')?;
        let k = self.cur.parse_int()?;
        self.cur.skip_ws();
        self.cur.expect(b']')?;
        Ok(k)
    }

    /// Optional exponent ^-1 after a letter; only Y supports it.
    fn parse_inverse_suffix(&mut self, l: Letter) -> Result<Letter> {
        self.cur.skip_ws();
        if !self.cur.eat(b'^') {
            return Ok(l);
        }
        self.cur.skip_ws();
        self.cur.expect(b'-')?;
        self.cur.expect(b'1')?;
        match l {
            Letter::Y(nu) => Ok(Letter::Y(nu.iter().map(|&a| -a).collect())),
            _ => self.cur.fail("^-1 is only supported on Y letters"),
        }
    }

    fn parse_scalar_power(&mut self) -> Result<i64> {
        self.cur.skip_ws();
        if self.cur.eat(b'^') {
            self.cur.parse_int()
        } else {
            Ok(1)
        }
    }

    fn parse_atom(&mut self) -> Result<Atom> {
        self.cur.skip_ws();
        let rank = self.rank;
        match self.cur.peek() {
            Some(b'q') => {
                self.cur.pos += 1;
                let k = self.parse_scalar_power()?;
                Ok(Atom::Coeff(LatticePoly::q_power(rank, k * self.two_e)))
            }
            Some(b't') => {
                self.cur.pos += 1;
                let k = self.parse_scalar_power()?;
                Ok(Atom::Coeff(LatticePoly::t_power(rank, k * 2)))
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.cur.parse_uint()?;
                self.cur.skip_ws();
                let c = if self.cur.eat(b'/') {
                    self.cur.skip_ws();
                    let d = self.cur.parse_uint()?;
                    if d == 0 {
                        return self.cur.fail("zero denominator");
                    }
                    BigRational::new(BigInt::from(n), BigInt::from(d))
                } else {
                    BigRational::from_integer(BigInt::from(n))
                };
                Ok(Atom::Coeff(LatticePoly::constant(rank, c)))
            }
            Some(b'T') => {
                self.cur.pos += 1;
                if self.cur.eat(b'p') {
                    Ok(Atom::Gen(Letter::Tp(self.parse_node(rank)?)))
                } else if self.cur.peek() == Some(b'i') {
                    for b in b"inv" {
                        self.cur.expect(*b)?;
                    }
                    Ok(Atom::Gen(Letter::Tinv(self.parse_node(rank)?)))
                } else {
                    Ok(Atom::Gen(Letter::T(self.parse_node(rank)?)))
                }
            }
            Some(b'D') => {
                self.cur.pos += 1;
                Ok(Atom::Gen(Letter::D(self.parse_node(rank)?)))
            }
            Some(b'X') => {
                self.cur.pos += 1;
                if self.cur.eat(b'd') {
                    Ok(Atom::Gen(Letter::Xd(self.parse_center_power()?)))
                } else {
                    Ok(Atom::Gen(Letter::X(self.parse_weight()?)))
                }
            }
            Some(b'Y') => {
                self.cur.pos += 1;
                if self.cur.eat(b'd') {
                    Ok(Atom::Gen(Letter::Yd(self.parse_center_power()?)))
                } else {
                    let l = Letter::Y(self.parse_weight()?);
                    Ok(Atom::Gen(self.parse_inverse_suffix(l)?))
                }
            }
            Some(b'p') => {
                self.cur.pos += 1;
                self.cur.expect(b'i')?;
                let r = self.parse_node(rank)?;
                if r == 0 {
                    return self.cur.fail("pi index starts at 1");
                }
                Ok(Atom::Gen(Letter::Pi(r)))
            }
            Some(b) => self.cur.fail(&format!("unexpected character '{}'", b as char)),
            None => self.cur.fail("unexpected end of input"),
        }
    }

    fn parse_term(&mut self) -> Result<(LatticePoly, Vec<Letter>)> {
        let mut coeff = LatticePoly::one(self.rank);
        let mut letters = Vec::new();
        loop {
            match self.parse_atom()? {
                Atom::Coeff(c) => coeff = coeff.mul(&c),
                Atom::Gen(l) => letters.push(l),
            }
            self.cur.skip_ws();
            if !self.cur.eat(b'*') {
                return Ok((coeff, letters));
            }
        }
    }
}

/// Parse a word expression: sums of `*`-products of generator letters and
/// q,t-scalar literals.
pub fn parse_expr(rs: &RootSystem, src: &str) -> Result<Word> {
    let mut p = ExprParser {
        cur: Cursor::new(src),
        rank: rs.rank,
        two_e: 2 * rs.e,
    };
    if p.cur.at_end() {
        return p.cur.fail("empty expression");
    }
    let mut word = Word::zero(rs.rank);
    let mut negate = p.cur.eat(b'-');
    loop {
        let (coeff, letters) = p.parse_term()?;
        let coeff = if negate { coeff.neg() } else { coeff };
        word = word.add(&Word::from_letters(rs.rank, letters).scale(&coeff));
        if p.cur.at_end() {
            return Ok(word);
        }
        negate = if p.cur.eat(b'+') {
            false
        } else if p.cur.eat(b'-') {
            true
        } else {
            return p.cur.fail("expected '+', '-', or end of expression");
        };
    }
}

/// Parse a comma-separated weight in fundamental-weight coordinates.
pub fn parse_lambda(rank: usize, src: &str) -> Result<Vec<i64>> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != rank {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected {rank} coordinates, found {}", parts.len()),
        });
    }
    parts
        .iter()
        .map(|p| {
            p.trim().parse::<i64>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coordinate '{}'", p.trim()),
            })
        })
        .collect()
}

/// Parse an affine group element: `*`-separated pieces `e`, `sK`, or
/// `y[c1,...,cn]` with translation coordinates in the weight basis.
pub fn parse_affine(rs: &RootSystem, src: &str) -> Result<ExtAffineElt> {
    let bad = |msg: String| Error::Parse { pos: 0, msg };
    let mut out = ExtAffineElt::identity(rs.rank);
    for piece in src.split('*') {
        let piece = piece.trim();
        let next = if piece == "e" {
            ExtAffineElt::identity(rs.rank)
        } else if let Some(rest) = piece.strip_prefix("y[") {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| bad(format!("unterminated translation '{piece}'")))?;
            ExtAffineElt::translation(&parse_lambda(rs.rank, inner)?)
        } else if let Some(rest) = piece.strip_prefix('s') {
            let i: usize = rest
                .parse()
                .map_err(|_| bad(format!("bad reflection piece '{piece}'")))?;
            if i == 0 || i > rs.rank {
                return Err(bad(format!(
                    "reflection index {i} out of range 1..={}",
                    rs.rank
                )));
            }
            ExtAffineElt::from_weyl(rs.simple_reflection(i))
        } else {
            return Err(bad(format!(
                "bad element piece '{piece}': expected e, sK, or y[..]"
            )));
        };
        out = out.mul_ext(&next, rs);
    }
    Ok(out)
}

fn weight_to_string(nu: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in nu.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() && c > 0 {
            s.push('+');
        }
        if c == -1 {
            s.push('-');
        } else if c != 1 {
            s.push_str(&c.to_string());
        }
        s.push_str(&format!("w{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn letter_to_string(l: &Letter) -> String {
    match l {
        Letter::T(i) => format!("T[{i}]"),
        Letter::Tinv(i) => format!("Tinv[{i}]"),
        Letter::D(i) => format!("D[{i}]"),
        Letter::Tp(i) => format!("Tp[{i}]"),
        Letter::X(nu) => format!("X[{}]", weight_to_string(nu)),
        Letter::Y(nu) => format!("Y[{}]", weight_to_string(nu)),
        Letter::Pi(r) => format!("pi[{r}]"),
        Letter::Xd(k) => format!("Xd[{k}]"),
        Letter::Yd(k) => format!("Yd[{k}]"),
    }
}

/// Canonical print of a scalar that stays within the grammar; exponents must
/// be whole q- or t-powers.
fn coeff_to_string(c: &LatticePoly, two_e: i64) -> Result<String> {
    let mut parts = Vec::new();
    for (m, co) in &c.terms {
        if m.x.iter().any(|&v| v != 0) {
            return Err(Error::Domain(
                "coefficient with x-dependence has no text form".into(),
            ));
        }
        if m.q % two_e != 0 || m.t % 2 != 0 {
            return Err(Error::Domain(
                "fractional scalar powers have no text form".into(),
            ));
        }
        let mut factors = Vec::new();
        let is_negative = co.is_negative();
        let abs = co.abs();
        if !abs.is_one() || (m.q == 0 && m.t == 0) {
            factors.push(if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            });
        }
        match m.q / two_e {
            0 => {}
            1 => factors.push("q".into()),
            k => factors.push(format!("q^{k}")),
        }
        match m.t / 2 {
            0 => {}
            1 => factors.push("t".into()),
            k => factors.push(format!("t^{k}")),
        }
        let sign = if is_negative { "-" } else { "" };
        parts.push(format!("{sign}{}", factors.join("*")));
    }
    Ok(parts.join(" + ").replace("+ -", "- "))
}

/// Canonical print of a word; parsing the output reproduces the word.
pub fn word_to_string(rs: &RootSystem, w: &Word) -> Result<String> {
    if w.terms.is_empty() {
        return Ok("0".into());
    }
    let mut parts = Vec::new();
    for (c, ls) in &w.terms {
        let mut factors = Vec::new();
        if !c.eq(&LatticePoly::one(rs.rank)) || ls.is_empty() {
            let printed = coeff_to_string(c, 2 * rs.e)?;
            if printed.contains(' ') {
                return Err(Error::Domain(
                    "sum coefficients have no single-term text form".into(),
                ));
            }
            factors.push(printed);
        }
        factors.extend(ls.iter().map(letter_to_string));
        parts.push(factors.join("*"));
    }
    Ok(parts.join(" + ").replace("+ -", "- "))
}

/// Name an affine element as pieces accepted by parse_affine.
pub fn affine_to_string(wt: &WeylTable, x: &ExtAffineElt) -> String {
    let mut s = wt.name(&x.w).to_string();
    if x.beta.iter().any(|&c| c != 0) {
        let coords: Vec<String> = x.beta.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("*y[{}]", coords.join(",")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::big;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name).unwrap()
    }

    #[test]
    fn words_with_products_and_sums() {
        let a2 = rs("A2");
        let w = parse_expr(&a2, "T[0]*X[-w1]").unwrap();
        assert_eq!(
            w,
            Word::from_letters(2, vec![Letter::T(0), Letter::X(vec![-1, 0])])
        );
        let w = parse_expr(&a2, "X[w1+w2] + 2*Y[2w1-3w2]").unwrap();
        let want = Word::letter(2, Letter::X(vec![1, 1])).add(
            &Word::letter(2, Letter::Y(vec![2, -3])).scale(&LatticePoly::constant(2, big(2))),
        );
        assert_eq!(w, want);
    }

    #[test]
    fn scalar_literals() {
        let a1 = rs("A1");
        let w = parse_expr(&a1, "q^-2*t*X[0] - 1/3").unwrap();
        let coeff = LatticePoly::q_power(1, -2 * 2 * a1.e).mul(&LatticePoly::t_power(1, 2));
        let want = Word::letter(1, Letter::X(vec![0]))
            .scale(&coeff)
            .add(&Word::one(1).scale(&LatticePoly::constant(1, -big(1) / big(3))));
        assert_eq!(w, want);
    }

    #[test]
    fn inverse_suffix_negates_bernstein_weights() {
        let a1 = rs("A1");
        assert_eq!(
            parse_expr(&a1, "Y[w1]^-1").unwrap(),
            Word::letter(1, Letter::Y(vec![-1]))
        );
        assert!(matches!(
            parse_expr(&a1, "X[w1]^-1"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn out_of_range_indices_are_parse_errors() {
        let a2 = rs("A2");
        for bad in ["T[9]", "X[w3]", "pi[0]", "Tp[3]"] {
            assert!(
                matches!(parse_expr(&a2, bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn error_positions_point_at_the_problem() {
        let a1 = rs("A1");
        match parse_expr(&a1, "T[1]*?") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let a2 = rs("A2");
        for src in [
            "T[0]*X[-w1]",
            "X[w1+w2] - 2*Y[2w1-3w2]*Yd[-6]",
            "q*T[1] + t^2*D[0] - pi[1]*Xd[6]",
            "Tinv[2]",
        ] {
            let w = parse_expr(&a2, src).unwrap();
            let printed = word_to_string(&a2, &w).unwrap();
            assert_eq!(parse_expr(&a2, &printed).unwrap(), w, "{src} -> {printed}");
        }
    }

    #[test]
    fn affine_elements_multiply_left_to_right() {
        let a2 = rs("A2");
        let wt = WeylTable::build(&a2).unwrap();
        let x = parse_affine(&a2, "s1*y[1,1]").unwrap();
        assert_eq!(x.w, *a2.simple_reflection(1));
        assert_eq!(x.beta, vec![1, 1]);
        assert_eq!(parse_affine(&a2, "e").unwrap(), ExtAffineElt::identity(2));
        let printed = affine_to_string(&wt, &x);
        assert_eq!(parse_affine(&a2, &printed).unwrap(), x);
        assert!(parse_affine(&a2, "s3").is_err());
    }

    #[test]
    fn lambda_lists_are_checked_for_length() {
        assert_eq!(parse_lambda(2, "1, -3").unwrap(), vec![1, -3]);
        assert!(parse_lambda(2, "1").is_err());
        assert!(parse_lambda(1, "x").is_err());
    }
}
