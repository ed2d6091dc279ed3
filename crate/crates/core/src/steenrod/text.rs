//! Text form of classes: odd generators `a1..am`, even generators `y1..ym`,
//! exterior factors written first in ascending order.

use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::class::{accumulate, koszul_negative, CohAlgebra, CohClass, CohMonomial};
use crate::error::{Error, Result};
use crate::galois::field::{reduce_i64, sub_mod};
use crate::galois::parse::Cursor;

pub(crate) fn serialize(x: &CohClass) -> String {
    if x.terms.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = x
        .terms
        .iter()
        .map(|(m, &c)| {
            let mut factors: Vec<String> = m.odd().map(|g| format!("a{g}")).collect();
            for (g, &e) in m.even.iter().enumerate().filter(|(_, &e)| e > 0) {
                factors.push(if e == 1 {
                    format!("y{}", g + 1)
                } else {
                    format!("y{}^{e}", g + 1)
                });
            }
            match (factors.is_empty(), c) {
                (true, c) => c.to_string(),
                (false, 1) => factors.join("*"),
                (false, c) => format!("{c}*{}", factors.join("*")),
            }
        })
        .collect();
    terms.join(" + ")
}

impl CohAlgebra {
    /// Parses a class; repeated odd factors give zero and reordering them
    /// introduces the Koszul sign.
    pub fn parse(&self, text: &str) -> Result<CohClass> {
        let mut cur = Cursor::new(text);
        if text.trim().is_empty() {
            return cur.error("empty input");
        }
        let terms = cur.signed_terms(|cur| self.parse_term(cur))?;
        let p = self.p();
        let mut out = BTreeMap::new();
        for (negative, term) in terms {
            if let Some((m, c)) = term {
                accumulate(&mut out, m, if negative { sub_mod(0, c, p) } else { c }, p);
            }
        }
        let mut x = self.zero();
        x.terms = out;
        Ok(x)
    }

    fn parse_term(&self, cur: &mut Cursor<'_>) -> Result<Option<(CohMonomial, u32)>> {
        let p = self.p();
        let mut c = 1u32;
        let mut odd = 0u32;
        let mut negative = false;
        let mut vanishes = false;
        let mut even: SmallVec<[u32; 8]> = SmallVec::from_elem(0, self.m());
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
                if !first {
                    return cur.error("coefficient must come first in a term");
                }
                c = reduce_i64((cur.number()? % p as u64) as i64, p);
            } else {
                let at = cur.pos();
                let name = cur.ident()?;
                let (kind, index) = name.split_at(1);
                let g: usize = match index.parse() {
                    Ok(g) if (1..=self.m()).contains(&g) && (kind == "a" || kind == "y") => g,
                    _ => {
                        return Err(Error::Parse {
                            position: at,
                            message: format!("unknown generator {name:?}"),
                        })
                    }
                };
                cur.skip_ws();
                let e = if cur.eat(b'^') {
                    cur.skip_ws();
                    let e = cur.number()?;
                    u32::try_from(e).or_else(|_| cur.error("exponent out of range"))?
                } else {
                    1
                };
                if kind == "y" {
                    even[g - 1] = even[g - 1].checked_add(e).ok_or(Error::Parse {
                        position: at,
                        message: "exponent out of range".into(),
                    })?;
                } else if e >= 2 {
                    vanishes = true;
                } else if e == 1 {
                    match koszul_negative(odd, 1 << (g - 1)) {
                        Some(sign) => {
                            negative ^= sign;
                            odd |= 1 << (g - 1);
                        }
                        None => vanishes = true,
                    }
                }
            }
            first = false;
            cur.skip_ws();
            if !cur.eat(b'*') {
                break;
            }
        }
        if vanishes || c == 0 {
            return Ok(None);
        }
        let c = if negative { sub_mod(0, c, p) } else { c };
        Ok(Some((CohMonomial { odd, even }, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn round_trip() {
        let alg = CohAlgebra::new(5, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let x = alg.random(&mut rng, 5, 4);
            assert_eq!(alg.parse(&x.to_string()).unwrap(), x, "{x}");
        }
    }

    #[test]
    fn odd_squares_and_signs() {
        let alg = CohAlgebra::new(3, 3).unwrap();
        assert!(alg.parse("a1*a1").unwrap().is_zero());
        assert!(alg.parse("a2^2*y1").unwrap().is_zero());
        assert_eq!(alg.parse("a2*a1").unwrap(), alg.parse("2*a1*a2").unwrap());
        assert_eq!(alg.parse("y2*a3*y1*a1").unwrap().to_string(), "2*a1*a3*y1*y2");
        assert_eq!(
            alg.parse("a1*y2 - y1*a2").unwrap(),
            &(&alg.a(1) * &alg.eta(1)) - &(&alg.xi(1) * &alg.b(1))
        );
        assert_eq!(alg.parse("0").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        let alg = CohAlgebra::new(3, 2).unwrap();
        assert!(matches!(alg.parse("a3"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(alg.parse("y1 + x1"), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(alg.parse("a1*2"), Err(Error::Parse { .. })));
        assert!(alg.parse("").is_err());
    }
}
