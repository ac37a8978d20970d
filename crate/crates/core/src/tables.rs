//! Literal multiplication tables of the named algebras.
//!
//! Each table lists the products `x_i x_j` for the non-unit basis elements,
//! one row per `x_i`. Entries are `±1` or `±x_k`. The unit is basis index 0.

use num::One;

use crate::algebra::Algebra;
use crate::error::{ParseError, Result};
use crate::rational::Rational;

/// Octonions, basis `1, e1..e7`.
pub const OCTONION_TABLE: &str = "
-1  e3 -e2  e5 -e4 -e7  e6
-e3 -1  e1  e6  e7 -e4 -e5
 e2 -e1 -1  e7 -e6  e5 -e4
-e5 -e6 -e7 -1  e1  e2  e3
 e4 -e7  e6 -e1 -1 -e3  e2
 e7  e4 -e5 -e2  e3 -1 -e1
-e6  e5  e4 -e3 -e2  e1 -1
";

/// Sedenions, basis `1, e1..e15`.
pub const SEDENION_TABLE: &str = "
-1   e3  -e2   e5  -e4  -e7   e6   e9  -e8  -e11  e10 -e13  e12  e15 -e14
-e3  -1   e1   e6   e7  -e4  -e5   e10  e11 -e8  -e9  -e14 -e15  e12  e13
 e2  -e1  -1   e7  -e6   e5  -e4   e11 -e10  e9  -e8  -e15  e14 -e13  e12
-e5  -e6  -e7  -1   e1   e2   e3   e12  e13  e14  e15 -e8  -e9  -e10 -e11
 e4  -e7   e6  -e1  -1  -e3   e2   e13 -e12  e15 -e14  e9  -e8   e11 -e10
 e7   e4  -e5  -e2   e3  -1  -e1   e14 -e15 -e12  e13  e10 -e11 -e8   e9
-e6   e5   e4  -e3  -e2   e1  -1   e15  e14 -e13 -e12  e11  e10 -e9  -e8
-e9  -e10 -e11 -e12 -e13 -e14 -e15 -1   e1   e2   e3   e4   e5   e6   e7
 e8  -e11  e10 -e13  e12  e15 -e14 -e1  -1  -e3   e2  -e5   e4   e7  -e6
 e11  e8  -e9  -e14 -e15  e12  e13 -e2   e3  -1  -e1  -e6  -e7   e4   e5
-e10  e9   e8  -e15  e14 -e13  e12 -e3  -e2   e1  -1  -e7   e6  -e5   e4
 e13  e14  e15  e8  -e9  -e10 -e11 -e4   e5   e6   e7  -1   -e1  -e2  -e3
-e12  e15 -e14  e9   e8   e11 -e10 -e5  -e4   e7  -e6   e1  -1    e3  -e2
-e15 -e12  e13  e10 -e11  e8   e9  -e6  -e7  -e4   e5   e2  -e3  -1    e1
 e14 -e13 -e12  e11  e10 -e9   e8  -e7   e6  -e5  -e4   e3   e2  -e1  -1
";

/// The 8-dimensional super-alternative algebra with quaternion even part,
/// basis `1, f1..f7`.
pub const TILDE_OCTONION_TABLE: &str = "
-1  f3 -f2  f5 -f4  f7 -f6
-f3 -1  f1  f6 -f7 -f4  f5
 f2 -f1 -1  f7  f6 -f5 -f4
-f5 -f6 -f7 -1  f1  f2  f3
 f4  f7 -f6 -f1 -1  f3 -f2
-f7  f4  f5 -f2 -f3 -1  f1
 f6 -f5  f4 -f3  f2 -f1 -1
";

/// The 16-dimensional super-alternative algebra with octonion even part,
/// basis `1, f1..f15`.
pub const TILDE_SEDENION_TABLE: &str = "
-1   f3  -f2   f5  -f4  -f7   f6   f9  -f8  -f11  f10 -f13  f12 -f15  f14
-f3  -1   f1   f6   f7  -f4  -f5   f10  f11 -f8  -f9  -f14  f15  f12 -f13
 f2  -f1  -1   f7  -f6   f5  -f4   f11 -f10  f9  -f8   f15  f14 -f13 -f12
-f5  -f6  -f7  -1   f1   f2   f3   f12  f13  f14 -f15 -f8  -f9  -f10  f11
 f4  -f7   f6  -f1  -1  -f3   f2   f13 -f12 -f15 -f14  f9  -f8   f11  f10
 f7   f4  -f5  -f2   f3  -1  -f1   f14  f15 -f12  f13  f10 -f11 -f8  -f9
-f6   f5   f4  -f3  -f2   f1  -1   f15 -f14  f13  f12 -f11 -f10  f9  -f8
-f9  -f10 -f11 -f12 -f13 -f14 -f15 -1   f1   f2   f3   f4   f5   f6   f7
 f8  -f11  f10 -f13  f12 -f15  f14 -f1  -1  -f3   f2  -f5   f4  -f7   f6
 f11  f8  -f9  -f14  f15  f12 -f13 -f2   f3  -1  -f1  -f6   f7   f4  -f5
-f10  f9   f8   f15  f14 -f13 -f12 -f3  -f2   f1  -1    f7   f6  -f5  -f4
 f13  f14 -f15  f8  -f9  -f10  f11 -f4   f5   f6  -f7  -1   -f1  -f2   f3
-f12 -f15 -f14  f9   f8   f11  f10 -f5  -f4  -f7  -f6   f1  -1    f3   f2
 f15 -f12  f13  f10 -f11  f8  -f9  -f6   f7  -f4   f5   f2  -f3  -1   -f1
-f14  f13  f12 -f11 -f10  f9   f8  -f7  -f6   f5   f4  -f3  -f2   f1  -1
";

/// Parses a signed table over the symbol `sym` (e.g. `"e"` or `"f"`).
pub fn parse_signed_table(text: &str, sym: &str) -> Result<Algebra> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect();
    let n = rows.len() + 1;
    let bad = |msg: String| ParseError::File(msg);
    let mut constants = vec![num::Zero::zero(); n * n * n];
    let set = |constants: &mut Vec<Rational>, i: usize, j: usize, k: usize, v: Rational| {
        constants[(i * n + j) * n + k] = v;
    };
    for k in 0..n {
        set(&mut constants, 0, k, k, Rational::one());
        set(&mut constants, k, 0, k, Rational::one());
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n - 1 {
            return Err(bad(format!("row {} has {} entries, expected {}", r + 1, row.len(), n - 1)).into());
        }
        for (c, entry) in row.iter().enumerate() {
            let (neg, body) = match entry.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, *entry),
            };
            let k = if body == "1" {
                0
            } else {
                body.strip_prefix(sym)
                    .and_then(|idx| idx.parse::<usize>().ok())
                    .filter(|&idx| idx >= 1 && idx < n)
                    .ok_or_else(|| bad(format!("bad table entry `{entry}`")))?
            };
            let v = if neg { -Rational::one() } else { Rational::one() };
            set(&mut constants, r + 1, c + 1, k, v);
        }
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "1".to_string() } else { format!("{sym}{i}") })
        .collect();
    Algebra::new(n, constants, Some(0))?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    #[test]
    fn all_tables_parse_with_signed_basis_products() {
        for (t, s, n) in [
            (OCTONION_TABLE, "e", 8),
            (SEDENION_TABLE, "e", 16),
            (TILDE_OCTONION_TABLE, "f", 8),
            (TILDE_SEDENION_TABLE, "f", 16),
        ] {
            let a = parse_signed_table(t, s).unwrap();
            assert_eq!(a.dim(), n);
            // every basis square is -1 and distinct units anticommute
            for i in 1..n {
                assert_eq!(a.basis_product(i, i), -Element::basis(n, 0));
                for j in 1..n {
                    if i != j {
                        assert_eq!(a.basis_product(i, j), -a.basis_product(j, i), "{s} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_ragged_table() {
        assert!(parse_signed_table("-1 e1\n-e1", "e").is_err());
        assert!(parse_signed_table("-1 e9\n-e9 -1", "e").is_err());
    }
}
