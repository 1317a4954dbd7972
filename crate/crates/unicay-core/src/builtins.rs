//! Ready-made finite semirings.
//!
//! Every constructor returns a table that passes
//! [`validate`](crate::SemiringTable::validate). The CLI addresses these
//! through the spec grammar parsed by [`BuiltinSpec`]:
//!
//! ```text
//! boolean | trunc:<n> | bounds:<r> | boolx2 | zmod:<n> | product:<spec>,<spec>
//! ```

use crate::semiring::SemiringTable;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuiltinError {
    #[error("parameter must be positive for {which}")]
    ZeroParameter { which: &'static str },
    #[error("unknown builtin spec {spec:?}: expected boolean | trunc:<n> | bounds:<r> | boolx2 | zmod:<n> | product:<spec>,<spec>")]
    BadSpec { spec: String },
    #[error("trailing input {rest:?} after builtin spec")]
    TrailingInput { rest: String },
}

fn table(
    name: String,
    elems: Vec<String>,
    zero: usize,
    one: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> SemiringTable {
    let n = elems.len();
    let mut add_t = Vec::with_capacity(n * n);
    let mut mul_t = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            add_t.push(add(i, j));
            mul_t.push(mul(i, j));
        }
    }
    SemiringTable::new(name, elems, zero, one, add_t, mul_t)
        .expect("builtin tables are structurally sound")
}

/// The binary Boolean semiring `{0, 1}` with `1 + 1 = 1`.
pub fn boolean() -> SemiringTable {
    table(
        "boolean".into(),
        vec!["0".into(), "1".into()],
        0,
        1,
        |a, b| (a | b),
        |a, b| (a & b),
    )
}

/// `{0, 1, ..., n}` with `a (+) b = min(a+b, n)` and `a (*) b = min(ab, n)`.
pub fn trunc(n: usize) -> Result<SemiringTable, BuiltinError> {
    if n == 0 {
        return Err(BuiltinError::ZeroParameter { which: "trunc" });
    }
    let elems = (0..=n).map(|i| i.to_string()).collect();
    Ok(table(
        format!("trunc:{n}"),
        elems,
        0,
        1,
        move |a, b| (a + b).min(n),
        move |a, b| (a * b).min(n),
    ))
}

/// `{0, 1, ..., r} + {x, 1+x, ..., (r-1)+x}`, where `x + x = x * x = x` and
/// `r` absorbs under addition (`r + a = r` for every `a`).
///
/// Elements are encoded as `i + eps*x` with `i <= r`, and `eps = 1` only
/// for `i <= r-1`; index layout is `0..=r` then `x, 1+x, ...`.
pub fn bounds(r: usize) -> Result<SemiringTable, BuiltinError> {
    if r == 0 {
        return Err(BuiltinError::ZeroParameter { which: "bounds" });
    }
    // (integer part, has-x part) for each index.
    let decode = move |idx: usize| -> (usize, bool) {
        if idx <= r {
            (idx, false)
        } else {
            (idx - r - 1, true)
        }
    };
    let encode = move |i: usize, x: bool| -> usize {
        // An integer part that reaches r swallows the x summand.
        if i >= r {
            r
        } else if x {
            r + 1 + i
        } else {
            i
        }
    };
    let mut elems: Vec<String> = (0..=r).map(|i| i.to_string()).collect();
    elems.push("x".into());
    for i in 1..r {
        elems.push(format!("{i}+x"));
    }
    Ok(table(
        format!("bounds:{r}"),
        elems,
        0,
        1,
        move |a, b| {
            let (i, e) = decode(a);
            let (j, d) = decode(b);
            encode(i + j, e || d)
        },
        move |a, b| {
            let (i, e) = decode(a);
            let (j, d) = decode(b);
            let x_part = (i >= 1 && d) || (j >= 1 && e) || (e && d);
            encode((i * j).min(r), x_part)
        },
    ))
}

/// The four-element semiring `{0, 1, x, 1+x}` with Boolean coefficients and
/// `x * x = 0`. Elements are pairs `a + b*x`, indexed `0, 1, x, 1+x`.
pub fn bool_x2() -> SemiringTable {
    // index -> (a, b) with value a + b*x
    let parts = [(0usize, 0usize), (1, 0), (0, 1), (1, 1)];
    let idx = move |a: usize, b: usize| -> usize {
        parts.iter().position(|&p| p == (a, b)).unwrap()
    };
    table(
        "boolx2".into(),
        vec!["0".into(), "1".into(), "x".into(), "1+x".into()],
        0,
        1,
        move |p, q| {
            let (a, b) = parts[p];
            let (c, d) = parts[q];
            idx(a | c, b | d)
        },
        move |p, q| {
            let (a, b) = parts[p];
            let (c, d) = parts[q];
            // (a + bx)(c + dx) = ac + (ad + bc)x, since x*x = 0.
            idx(a & c, (a & d) | (b & c))
        },
    )
}

/// Residues mod `n` with the usual operations. `zmod(1)` is the
/// one-element semiring in which zero and one coincide.
pub fn zmod(n: usize) -> Result<SemiringTable, BuiltinError> {
    if n == 0 {
        return Err(BuiltinError::ZeroParameter { which: "zmod" });
    }
    let elems = (0..n).map(|i| i.to_string()).collect();
    Ok(table(
        format!("zmod:{n}"),
        elems,
        0,
        if n == 1 { 0 } else { 1 },
        move |a, b| (a + b) % n,
        move |a, b| (a * b) % n,
    ))
}

/// Componentwise direct product. Element `(i, j)` of the product gets index
/// `i * |T| + j` and name `(a,b)` from the component names.
pub fn product(s: &SemiringTable, t: &SemiringTable) -> SemiringTable {
    let (ns, nt) = (s.order(), t.order());
    let elems = (0..ns * nt)
        .map(|p| format!("({},{})", s.elem_name(p / nt), t.elem_name(p % nt)))
        .collect();
    table(
        format!("product:{},{}", s.name(), t.name()),
        elems,
        s.zero() * nt + t.zero(),
        s.one() * nt + t.one(),
        |a, b| s.add(a / nt, b / nt) * nt + t.add(a % nt, b % nt),
        |a, b| s.mul(a / nt, b / nt) * nt + t.mul(a % nt, b % nt),
    )
}

/// Parsed builtin spec, the CLI-facing mini-grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinSpec {
    Boolean,
    Trunc(usize),
    Bounds(usize),
    BoolX2,
    Zmod(usize),
    Product(Box<BuiltinSpec>, Box<BuiltinSpec>),
}

impl BuiltinSpec {
    /// Parses a complete spec string, rejecting trailing input.
    pub fn parse(input: &str) -> Result<Self, BuiltinError> {
        let (spec, rest) = Self::parse_prefix(input.trim())?;
        if !rest.is_empty() {
            return Err(BuiltinError::TrailingInput { rest: rest.into() });
        }
        Ok(spec)
    }

    /// Parses one spec from the front of `input`, returning the rest.
    /// `product:` consumes its two operands recursively, so nesting is
    /// unambiguous even though `,` separates them.
    fn parse_prefix(input: &str) -> Result<(Self, &str), BuiltinError> {
        if let Some(rest) = input.strip_prefix("product:") {
            let (left, rest) = Self::parse_prefix(rest)?;
            let rest = rest.strip_prefix(',').ok_or_else(|| BuiltinError::BadSpec {
                spec: input.into(),
            })?;
            let (right, rest) = Self::parse_prefix(rest)?;
            return Ok((BuiltinSpec::Product(Box::new(left), Box::new(right)), rest));
        }
        for (tag, make) in [
            ("boolean", BuiltinSpec::Boolean),
            ("boolx2", BuiltinSpec::BoolX2),
        ] {
            if let Some(rest) = input.strip_prefix(tag) {
                return Ok((make, rest));
            }
        }
        for (tag, make) in [
            ("trunc:", BuiltinSpec::Trunc as fn(usize) -> BuiltinSpec),
            ("bounds:", BuiltinSpec::Bounds),
            ("zmod:", BuiltinSpec::Zmod),
        ] {
            if let Some(rest) = input.strip_prefix(tag) {
                let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
                if digits.is_empty() {
                    return Err(BuiltinError::BadSpec { spec: input.into() });
                }
                let value: usize = digits.parse().map_err(|_| BuiltinError::BadSpec {
                    spec: input.into(),
                })?;
                return Ok((make(value), &rest[digits.len()..]));
            }
        }
        Err(BuiltinError::BadSpec { spec: input.into() })
    }

    /// Builds the table this spec denotes.
    pub fn build(&self) -> Result<SemiringTable, BuiltinError> {
        match self {
            BuiltinSpec::Boolean => Ok(boolean()),
            BuiltinSpec::Trunc(n) => trunc(*n),
            BuiltinSpec::Bounds(r) => bounds(*r),
            BuiltinSpec::BoolX2 => Ok(bool_x2()),
            BuiltinSpec::Zmod(n) => zmod(*n),
            BuiltinSpec::Product(a, b) => Ok(product(&a.build()?, &b.build()?)),
        }
    }
}

// Display mirrors the parse grammar exactly.
impl fmt::Display for BuiltinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinSpec::Boolean => write!(f, "boolean"),
            BuiltinSpec::Trunc(n) => write!(f, "trunc:{n}"),
            BuiltinSpec::Bounds(r) => write!(f, "bounds:{r}"),
            BuiltinSpec::BoolX2 => write!(f, "boolx2"),
            BuiltinSpec::Zmod(n) => write!(f, "zmod:{n}"),
            BuiltinSpec::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

/// A fixed roster of small built-ins, used by property tests and by the
/// exhaustive vacuity scan.
pub fn roster() -> Vec<SemiringTable> {
    let mut out = vec![boolean(), bool_x2()];
    for n in 1..=5 {
        out.push(trunc(n).unwrap());
    }
    for r in 1..=3 {
        out.push(bounds(r).unwrap());
    }
    for n in 1..=6 {
        out.push(zmod(n).unwrap());
    }
    out.push(product(&boolean(), &boolean()));
    out.push(product(&boolean(), &bounds(1).unwrap()));
    out.push(product(&trunc(2).unwrap(), &boolean()));
    out.push(product(&boolean(), &zmod(3).unwrap()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_validates() {
        for s in roster() {
            let violations = s.validate();
            assert!(
                violations.is_empty(),
                "{} violates: {:?}",
                s.name(),
                violations
            );
        }
    }

    #[test]
    fn trunc_defining_identities() {
        let s = trunc(3).unwrap();
        let two = s.elem_index("2").unwrap();
        let three = s.elem_index("3").unwrap();
        assert_eq!(s.add(two, two), three);
        assert_eq!(s.mul(two, two), three);
        assert_eq!(s.units().members(), &[s.one()]);
    }

    #[test]
    fn bounds_defining_identities() {
        let s = bounds(2).unwrap();
        assert_eq!(s.order(), 5);
        assert_eq!(
            s.elem_names(),
            &["0", "1", "2", "x", "1+x"]
        );
        let x = s.elem_index("x").unwrap();
        let r = s.elem_index("2").unwrap();
        assert_eq!(s.add(x, x), x);
        assert_eq!(s.mul(x, x), x);
        for a in 0..s.order() {
            assert_eq!(s.add(r, a), r, "r absorbs");
        }
        // x + (r-1) + 1 = r
        let x_r1 = s.elem_index("1+x").unwrap();
        assert_eq!(s.add(x_r1, s.one()), r);
        let p = s.profile();
        assert!(p.entire && p.antinegative);
    }

    #[test]
    fn bounds_one_is_three_elements() {
        let s = bounds(1).unwrap();
        assert_eq!(s.elem_names(), &["0", "1", "x"]);
        assert_eq!(s.add(s.one(), s.one()), s.one());
        assert!(s.profile().units_closed_under_addition);
    }

    #[test]
    fn bool_x2_defining_identities() {
        let s = bool_x2();
        let x = s.elem_index("x").unwrap();
        let one_x = s.elem_index("1+x").unwrap();
        assert_eq!(s.add(one_x, one_x), one_x);
        assert_eq!(s.mul(x, x), s.zero());
        assert_eq!(s.units().members(), &[s.one()]);
        let p = s.profile();
        assert!(p.antinegative);
        assert!(!p.entire);
    }

    #[test]
    fn product_units_are_componentwise() {
        let s = boolean();
        let t = zmod(6).unwrap();
        let p = product(&s, &t);
        assert!(p.validate().is_empty());
        let su = s.units();
        let tu = t.units();
        let pu = p.units();
        let mut expect: Vec<usize> = su
            .members()
            .iter()
            .flat_map(|&a| tu.members().iter().map(move |&b| a * t.order() + b))
            .collect();
        expect.sort_unstable();
        assert_eq!(pu.members(), expect.as_slice());
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(matches!(trunc(0), Err(BuiltinError::ZeroParameter { .. })));
        assert!(matches!(bounds(0), Err(BuiltinError::ZeroParameter { .. })));
        assert!(matches!(zmod(0), Err(BuiltinError::ZeroParameter { .. })));
    }

    #[test]
    fn spec_grammar_round_trips() {
        for text in [
            "boolean",
            "boolx2",
            "trunc:3",
            "bounds:2",
            "zmod:5",
            "product:boolean,zmod:5",
            "product:product:boolean,boolean,trunc:2",
        ] {
            let spec = BuiltinSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert!(BuiltinSpec::parse("nope").is_err());
        assert!(BuiltinSpec::parse("trunc:").is_err());
        assert!(BuiltinSpec::parse("boolean junk").is_err());
        assert!(BuiltinSpec::parse("product:boolean").is_err());
    }

    #[test]
    fn builtin_names_match_specs() {
        assert_eq!(boolean().name(), "boolean");
        assert_eq!(trunc(3).unwrap().name(), "trunc:3");
        assert_eq!(bounds(2).unwrap().name(), "bounds:2");
        assert_eq!(
            product(&boolean(), &zmod(5).unwrap()).name(),
            "product:boolean,zmod:5"
        );
    }
}
