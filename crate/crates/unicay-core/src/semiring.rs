//! Finite semirings as dense operation tables.
//!
//! A semiring is a set with a commutative additive monoid (identity `0`), a
//! multiplicative monoid (identity `1`), two-sided distributivity, and `0`
//! annihilating under multiplication. Elements are dense indices
//! `0..n-1`; element names exist only for display and for the text format.
//!
//! [`SemiringTable::validate`] checks every axiom exhaustively and reports
//! all violating instances, so a hand-written table can be fixed in one
//! pass. [`SemiringTable::profile`] computes the structural predicates the
//! bound checks need (entire, zero-sum-free, additively cancellative, units
//! closed under addition, and the additive period of `1`).

use std::fmt;
use thiserror::Error;

/// A finite semiring given by its addition and multiplication tables.
///
/// The tables are stored row-major: `add[i*n + j]` is the index of
/// `elems[i] + elems[j]`. Construction checks shape and index ranges only;
/// the algebraic axioms are checked separately by [`validate`].
///
/// Values of this type are immutable after construction and safe to share
/// across threads.
///
/// [`validate`]: SemiringTable::validate
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringTable {
    name: String,
    n: usize,
    elems: Vec<String>,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// Shape or index errors, distinct from axiom violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("a semiring needs at least one element")]
    Empty,
    #[error("expected {expected} element names, got {got}")]
    ElementCount { expected: usize, got: usize },
    #[error("element name {name:?} is not a valid token (nonempty, no whitespace, no '#')")]
    BadElementName { name: String },
    #[error("duplicate element name {name:?}")]
    DuplicateElementName { name: String },
    #[error("{table} table has {got} entries, expected {expected}")]
    TableSize {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{table} table entry at ({row},{col}) is {value}, out of range 0..{n}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("{which} index {index} is out of range 0..{n}")]
    IdentityOutOfRange {
        which: &'static str,
        index: usize,
        n: usize,
    },
}

/// One violated axiom instance, with the witnessing elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `(a+b)+c != a+(b+c)`
    AddNotAssociative { a: usize, b: usize, c: usize },
    /// `a+b != b+a`
    AddNotCommutative { a: usize, b: usize },
    /// `0+a != a` or `a+0 != a`
    AddIdentityFails { a: usize },
    /// `(a*b)*c != a*(b*c)`
    MulNotAssociative { a: usize, b: usize, c: usize },
    /// `1*a != a` or `a*1 != a`
    MulIdentityFails { a: usize },
    /// `a*(b+c) != a*b + a*c`
    NotLeftDistributive { a: usize, b: usize, c: usize },
    /// `(a+b)*c != a*c + b*c`
    NotRightDistributive { a: usize, b: usize, c: usize },
    /// `0*a != 0` or `a*0 != 0`; the witness pair is `(0, a)` or `(a, 0)`.
    ZeroNotAnnihilating { a: usize, zero_on_left: bool },
}

impl AxiomViolation {
    /// Human-readable description using the table's element names.
    pub fn render(&self, s: &SemiringTable) -> String {
        let e = |i: usize| s.elem_name(i);
        match *self {
            AxiomViolation::AddNotAssociative { a, b, c } => format!(
                "addition not associative at ({}, {}, {}): ({}+{})+{} = {} but {}+({}+{}) = {}",
                e(a),
                e(b),
                e(c),
                e(a),
                e(b),
                e(c),
                e(s.add(s.add(a, b), c)),
                e(a),
                e(b),
                e(c),
                e(s.add(a, s.add(b, c)))
            ),
            AxiomViolation::AddNotCommutative { a, b } => format!(
                "addition not commutative at ({}, {}): {}+{} = {} but {}+{} = {}",
                e(a),
                e(b),
                e(a),
                e(b),
                e(s.add(a, b)),
                e(b),
                e(a),
                e(s.add(b, a))
            ),
            AxiomViolation::AddIdentityFails { a } => format!(
                "zero is not an additive identity at {}: {}+{} = {}, {}+{} = {}",
                e(a),
                e(s.zero),
                e(a),
                e(s.add(s.zero, a)),
                e(a),
                e(s.zero),
                e(s.add(a, s.zero))
            ),
            AxiomViolation::MulNotAssociative { a, b, c } => format!(
                "multiplication not associative at ({}, {}, {}): ({}*{})*{} = {} but {}*({}*{}) = {}",
                e(a),
                e(b),
                e(c),
                e(a),
                e(b),
                e(c),
                e(s.mul(s.mul(a, b), c)),
                e(a),
                e(b),
                e(c),
                e(s.mul(a, s.mul(b, c)))
            ),
            AxiomViolation::MulIdentityFails { a } => format!(
                "one is not a multiplicative identity at {}: {}*{} = {}, {}*{} = {}",
                e(a),
                e(s.one),
                e(a),
                e(s.mul(s.one, a)),
                e(a),
                e(s.one),
                e(s.mul(a, s.one))
            ),
            AxiomViolation::NotLeftDistributive { a, b, c } => format!(
                "not left distributive at ({}, {}, {}): {}*({}+{}) = {} but {}*{} + {}*{} = {}",
                e(a),
                e(b),
                e(c),
                e(a),
                e(b),
                e(c),
                e(s.mul(a, s.add(b, c))),
                e(a),
                e(b),
                e(a),
                e(c),
                e(s.add(s.mul(a, b), s.mul(a, c)))
            ),
            AxiomViolation::NotRightDistributive { a, b, c } => format!(
                "not right distributive at ({}, {}, {}): ({}+{})*{} = {} but {}*{} + {}*{} = {}",
                e(a),
                e(b),
                e(c),
                e(a),
                e(b),
                e(c),
                e(s.mul(s.add(a, b), c)),
                e(a),
                e(c),
                e(b),
                e(c),
                e(s.add(s.mul(a, c), s.mul(b, c)))
            ),
            AxiomViolation::ZeroNotAnnihilating { a, zero_on_left } => {
                if zero_on_left {
                    format!(
                        "zero does not annihilate, witness ({}, {}): {}*{} = {}",
                        e(s.zero),
                        e(a),
                        e(s.zero),
                        e(a),
                        e(s.mul(s.zero, a))
                    )
                } else {
                    format!(
                        "zero does not annihilate, witness ({}, {}): {}*{} = {}",
                        e(a),
                        e(s.zero),
                        e(a),
                        e(s.zero),
                        e(s.mul(a, s.zero))
                    )
                }
            }
        }
    }

    /// Short axiom label, stable across renderings.
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::AddNotAssociative { .. } => "add-associativity",
            AxiomViolation::AddNotCommutative { .. } => "add-commutativity",
            AxiomViolation::AddIdentityFails { .. } => "add-identity",
            AxiomViolation::MulNotAssociative { .. } => "mul-associativity",
            AxiomViolation::MulIdentityFails { .. } => "mul-identity",
            AxiomViolation::NotLeftDistributive { .. } => "left-distributivity",
            AxiomViolation::NotRightDistributive { .. } => "right-distributivity",
            AxiomViolation::ZeroNotAnnihilating { .. } => "zero-annihilation",
        }
    }
}

/// Structural predicates of a valid table, each computed by exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiringProfile {
    /// `a*b == b*a` for all `a, b`.
    pub commutative: bool,
    /// `a*b == 0` implies `a == 0` or `b == 0`.
    pub entire: bool,
    /// `a+b == 0` implies `a == b == 0` (zero-sum-free).
    pub antinegative: bool,
    /// `x+y == x+z` implies `y == z`, for all `x`.
    pub additively_cancellative: bool,
    /// `u+v` is a unit whenever `u` and `v` are.
    pub units_closed_under_addition: bool,
    /// Minimal `(m, n)` with `m < n` and `m*1 == n*1` under repeated
    /// addition (minimal `n` first, then minimal `m`). Always exists in a
    /// finite semiring.
    pub one_index_period: (usize, usize),
}

/// The group `S*` of elements with a two-sided multiplicative inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSet {
    members: Vec<usize>,
    inverse: Vec<Option<usize>>,
}

impl UnitSet {
    /// Unit element indices in increasing order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.inverse.get(i).is_some_and(|v| v.is_some())
    }

    /// Inverse of `i`, if `i` is a unit.
    pub fn inverse(&self, i: usize) -> Option<usize> {
        self.inverse.get(i).copied().flatten()
    }
}

impl SemiringTable {
    /// Builds a table after checking shapes, ranges and element names.
    ///
    /// Element names must be nonempty, free of whitespace and `'#'` (the
    /// text format's token rules), and pairwise distinct. Axioms are not
    /// checked here; call [`validate`](Self::validate).
    pub fn new(
        name: impl Into<String>,
        elems: Vec<String>,
        zero: usize,
        one: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<Self, StructuralError> {
        let n = elems.len();
        if n == 0 {
            return Err(StructuralError::Empty);
        }
        for name in &elems {
            if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
                return Err(StructuralError::BadElementName { name: name.clone() });
            }
        }
        for (i, name) in elems.iter().enumerate() {
            if elems[..i].contains(name) {
                return Err(StructuralError::DuplicateElementName { name: name.clone() });
            }
        }
        if zero >= n {
            return Err(StructuralError::IdentityOutOfRange {
                which: "zero",
                index: zero,
                n,
            });
        }
        if one >= n {
            return Err(StructuralError::IdentityOutOfRange {
                which: "one",
                index: one,
                n,
            });
        }
        for (table, entries) in [("add", &add), ("mul", &mul)] {
            if entries.len() != n * n {
                return Err(StructuralError::TableSize {
                    table,
                    expected: n * n,
                    got: entries.len(),
                });
            }
            for (pos, &v) in entries.iter().enumerate() {
                if v >= n {
                    return Err(StructuralError::EntryOutOfRange {
                        table,
                        row: pos / n,
                        col: pos % n,
                        value: v,
                        n,
                    });
                }
            }
        }
        Ok(SemiringTable {
            name: name.into(),
            n,
            elems,
            zero,
            one,
            add,
            mul,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elem_names(&self) -> &[String] {
        &self.elems
    }

    pub fn elem_name(&self, i: usize) -> &str {
        &self.elems[i]
    }

    /// Index of an element by name.
    pub fn elem_index(&self, name: &str) -> Option<usize> {
        self.elems.iter().position(|e| e == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.n + j]
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j]
    }

    /// Sum of a sequence of elements, `0` for the empty sequence.
    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Checks every semiring axiom exhaustively and returns all violating
    /// instances. A valid table returns an empty list.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            if self.add(self.zero, a) != a || self.add(a, self.zero) != a {
                out.push(AxiomViolation::AddIdentityFails { a });
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                out.push(AxiomViolation::MulIdentityFails { a });
            }
            if self.mul(self.zero, a) != self.zero {
                out.push(AxiomViolation::ZeroNotAnnihilating {
                    a,
                    zero_on_left: true,
                });
            }
            if self.mul(a, self.zero) != self.zero {
                out.push(AxiomViolation::ZeroNotAnnihilating {
                    a,
                    zero_on_left: false,
                });
            }
        }
        for a in 0..n {
            for b in a..n {
                if self.add(a, b) != self.add(b, a) {
                    out.push(AxiomViolation::AddNotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        out.push(AxiomViolation::AddNotAssociative { a, b, c });
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        out.push(AxiomViolation::MulNotAssociative { a, b, c });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        out.push(AxiomViolation::NotLeftDistributive { a, b, c });
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        out.push(AxiomViolation::NotRightDistributive { a, b, c });
                    }
                }
            }
        }
        out
    }

    /// The group of invertible elements, with the inverse map.
    pub fn units(&self) -> UnitSet {
        let n = self.n;
        let mut inverse = vec![None; n];
        let mut members = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if self.mul(u, v) == self.one && self.mul(v, u) == self.one {
                    inverse[u] = Some(v);
                    members.push(u);
                    break;
                }
            }
        }
        UnitSet { members, inverse }
    }

    /// Computes all structural predicates of a valid table.
    pub fn profile(&self) -> SemiringProfile {
        let n = self.n;
        let zero = self.zero;
        let mut commutative = true;
        let mut entire = true;
        let mut antinegative = true;
        let mut additively_cancellative = true;
        'comm: for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) {
                    commutative = false;
                    break 'comm;
                }
            }
        }
        'ent: for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) == zero && a != zero && b != zero {
                    entire = false;
                    break 'ent;
                }
            }
        }
        'anti: for a in 0..n {
            for b in 0..n {
                if self.add(a, b) == zero && (a != zero || b != zero) {
                    antinegative = false;
                    break 'anti;
                }
            }
        }
        'canc: for x in 0..n {
            for y in 0..n {
                for z in (y + 1)..n {
                    if self.add(x, y) == self.add(x, z) {
                        additively_cancellative = false;
                        break 'canc;
                    }
                }
            }
        }
        let units = self.units();
        let mut units_closed_under_addition = true;
        'cl: for &u in units.members() {
            for &v in units.members() {
                if !units.contains(self.add(u, v)) {
                    units_closed_under_addition = false;
                    break 'cl;
                }
            }
        }
        SemiringProfile {
            commutative,
            entire,
            antinegative,
            additively_cancellative,
            units_closed_under_addition,
            one_index_period: self.one_index_period(),
        }
    }

    /// Minimal `(m, n)` with `m*1 == n*1`: iterate `1, 1+1, 1+1+1, ...`
    /// until the first repeat. The values before the first collision are
    /// pairwise distinct, so the collision partner `m` is unique.
    fn one_index_period(&self) -> (usize, usize) {
        let mut seen = vec![self.one];
        let mut t = self.one;
        loop {
            t = self.add(t, self.one);
            if let Some(m) = seen.iter().position(|&x| x == t) {
                return (m + 1, seen.len() + 1);
            }
            seen.push(t);
        }
    }
}

impl fmt::Display for SemiringTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    /// Independent axiom oracle over closures; used to confirm which axioms
    /// a hand-patched table actually breaks, separately from `validate`.
    fn oracle_axiom_scan(
        n: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Vec<&'static str> {
        let mut broken = Vec::new();
        let mut hit = |label: &'static str, v: &mut Vec<&'static str>| {
            if !v.contains(&label) {
                v.push(label);
            }
        };
        for a in 0..n {
            if add(zero, a) != a || add(a, zero) != a {
                hit("add-identity", &mut broken);
            }
            if mul(one, a) != a || mul(a, one) != a {
                hit("mul-identity", &mut broken);
            }
            if mul(zero, a) != zero || mul(a, zero) != zero {
                hit("zero-annihilation", &mut broken);
            }
            for b in 0..n {
                if add(a, b) != add(b, a) {
                    hit("add-commutativity", &mut broken);
                }
                for c in 0..n {
                    if add(add(a, b), c) != add(a, add(b, c)) {
                        hit("add-associativity", &mut broken);
                    }
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        hit("mul-associativity", &mut broken);
                    }
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                        hit("left-distributivity", &mut broken);
                    }
                    if mul(add(a, b), c) != add(mul(a, c), mul(b, c)) {
                        hit("right-distributivity", &mut broken);
                    }
                }
            }
        }
        broken
    }

    #[test]
    fn boolean_is_valid() {
        assert!(builtins::boolean().validate().is_empty());
    }

    /// Patching the Boolean table so that 1+1 = 0 yields the two-element
    /// field of residues mod 2: the oracle scan finds no broken axiom, so
    /// the patched table must validate cleanly.
    #[test]
    fn patched_boolean_addition_is_residues_mod_two() {
        let patched = SemiringTable::new(
            "patched",
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![0, 1, 1, 0],
            vec![0, 0, 0, 1],
        )
        .unwrap();
        let oracle = oracle_axiom_scan(
            2,
            |a, b| (a + b) % 2,
            |a, b| a * b,
            0,
            1,
        );
        assert!(oracle.is_empty(), "oracle found broken axioms: {oracle:?}");
        assert_eq!(patched.validate(), Vec::new());
        let z2 = builtins::zmod(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(patched.add(a, b), z2.add(a, b));
                assert_eq!(patched.mul(a, b), z2.mul(a, b));
            }
        }
    }

    #[test]
    fn zero_annihilation_violation_carries_witness() {
        // mul(0,1) patched to 1.
        let bad = SemiringTable::new(
            "bad",
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![0, 1, 1, 1],
            vec![0, 1, 0, 1],
        )
        .unwrap();
        let violations = bad.validate();
        assert!(violations.contains(&AxiomViolation::ZeroNotAnnihilating {
            a: 1,
            zero_on_left: true
        }));
        let v = AxiomViolation::ZeroNotAnnihilating {
            a: 1,
            zero_on_left: true,
        };
        assert!(v.render(&bad).contains("(0, 1)"));
    }

    #[test]
    fn structural_errors_are_not_axiom_violations() {
        let r = SemiringTable::new(
            "short",
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![0, 1, 1],
            vec![0, 0, 0, 1],
        );
        assert!(matches!(r, Err(StructuralError::TableSize { .. })));
        let r = SemiringTable::new(
            "range",
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![0, 1, 1, 2],
            vec![0, 0, 0, 1],
        );
        assert!(matches!(r, Err(StructuralError::EntryOutOfRange { .. })));
        let r = SemiringTable::new(
            "badzero",
            vec!["0".into(), "1".into()],
            2,
            1,
            vec![0, 1, 1, 1],
            vec![0, 0, 0, 1],
        );
        assert!(matches!(r, Err(StructuralError::IdentityOutOfRange { .. })));
        let r = SemiringTable::new(
            "dup",
            vec!["a".into(), "a".into()],
            0,
            1,
            vec![0, 1, 1, 1],
            vec![0, 0, 0, 1],
        );
        assert!(matches!(r, Err(StructuralError::DuplicateElementName { .. })));
        let r = SemiringTable::new(
            "space",
            vec!["a b".into(), "c".into()],
            0,
            1,
            vec![0, 1, 1, 1],
            vec![0, 0, 0, 1],
        );
        assert!(matches!(r, Err(StructuralError::BadElementName { .. })));
    }

    #[test]
    fn boolean_profile() {
        let b = builtins::boolean();
        let p = b.profile();
        assert!(p.commutative);
        assert!(p.entire);
        assert!(p.antinegative);
        assert!(!p.additively_cancellative);
        assert!(p.units_closed_under_addition);
        assert_eq!(p.one_index_period, (1, 2));
    }

    #[test]
    fn bounds_profile_period() {
        for r in 1..=4 {
            let s = builtins::bounds(r).unwrap();
            assert_eq!(s.profile().one_index_period, (r, r + 1), "r = {r}");
        }
    }

    #[test]
    fn zmod_profiles() {
        let z5 = builtins::zmod(5).unwrap();
        let p = z5.profile();
        assert!(p.entire);
        assert!(!p.antinegative);
        assert!(p.additively_cancellative);
        assert_eq!(p.one_index_period, (1, 6));

        let z6 = builtins::zmod(6).unwrap();
        let p6 = z6.profile();
        assert!(!p6.entire); // 2 * 3 = 0
        assert_eq!(p6.one_index_period, (1, 7));
    }

    #[test]
    fn units_by_brute_force_pair_search() {
        // Independent oracle: u is a unit iff some v has uv = vu = 1.
        let oracle = |s: &SemiringTable| -> Vec<usize> {
            (0..s.order())
                .filter(|&u| {
                    (0..s.order()).any(|v| s.mul(u, v) == s.one() && s.mul(v, u) == s.one())
                })
                .collect()
        };
        let b = builtins::boolean();
        assert_eq!(b.units().members(), &[1]);
        assert_eq!(oracle(&b), vec![1]);

        for r in 1..=3 {
            let s = builtins::bounds(r).unwrap();
            assert_eq!(s.units().members(), &[1], "r = {r}");
        }

        let z6 = builtins::zmod(6).unwrap();
        assert_eq!(z6.units().members(), &[1, 5]);
        assert_eq!(oracle(&z6), vec![1, 5]);
        assert_eq!(z6.units().inverse(5), Some(5));
    }

    #[test]
    fn units_form_a_group() {
        for s in builtins::roster() {
            let units = s.units();
            assert!(units.contains(s.one()), "{}", s.name());
            for &u in units.members() {
                let v = units.inverse(u).unwrap();
                assert_eq!(s.mul(u, v), s.one());
                assert_eq!(s.mul(v, u), s.one());
                for &w in units.members() {
                    assert!(units.contains(s.mul(u, w)), "{}: closure", s.name());
                }
            }
        }
    }

    #[test]
    fn trivial_semiring_is_degenerate_but_valid() {
        let t = builtins::zmod(1).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.zero(), t.one());
        assert!(t.validate().is_empty());
        let p = t.profile();
        assert!(p.entire && p.antinegative && p.additively_cancellative);
        assert!(p.units_closed_under_addition);
        assert_eq!(p.one_index_period, (1, 2));
        assert_eq!(t.units().members(), &[0]);
    }

    #[test]
    fn profile_flags_match_quantifier_scans() {
        // Re-derive each flag with a plain scan and compare.
        for s in builtins::roster() {
            let p = s.profile();
            let n = s.order();
            let entire = !(0..n).any(|a| {
                (0..n).any(|b| a != s.zero() && b != s.zero() && s.mul(a, b) == s.zero())
            });
            let anti = !(0..n).any(|a| {
                (0..n).any(|b| s.add(a, b) == s.zero() && (a != s.zero() || b != s.zero()))
            });
            let canc = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| y == z || s.add(x, y) != s.add(x, z)))
            });
            assert_eq!(p.entire, entire, "{}", s.name());
            assert_eq!(p.antinegative, anti, "{}", s.name());
            assert_eq!(p.additively_cancellative, canc, "{}", s.name());
            let (m, nn) = p.one_index_period;
            assert!(m < nn);
            let iter = |count: usize| (0..count).fold(s.zero(), |acc, _| s.add(acc, s.one()));
            assert_eq!(iter(m), iter(nn), "{}", s.name());
        }
    }
}
