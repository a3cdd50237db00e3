//! The polytope family P_n: points with their G-presentations, vertices
//! indexed by group-based flows, the vertex lattice L_n, the facet forms
//! S_g(x, A) over odd column subsets, and membership in dilations k*P_n.
//!
//! Everything is exact 64-bit integer arithmetic. The membership test is a
//! full scan over all 3 * 2^(n-1) facet forms; it is the soundness anchor
//! for the decomposition machinery, so no shortcuts are taken there.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupElem;

/// Hard cap on the column count accepted by the facet scan. The scan is
/// exponential in n; exceeding the cap is an explicit error, never a
/// silent truncation.
pub const DEFAULT_COLUMN_CAP: usize = 24;

/// A nonnegative integer vector indexed by (column, group element).
///
/// Viewed through its G-presentation this is an n-tuple of multisets of
/// group elements: element `g` appears `x_g^j` times in multiset `j`.
/// Columns are 0-based in the API; serialized forms are 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    n: usize,
    coords: Vec<i64>,
}

impl Point {
    pub fn zero(n: usize) -> Point {
        assert!(n >= 1, "column count must be positive");
        Point {
            n,
            coords: vec![0; 4 * n],
        }
    }

    pub fn from_columns(columns: &[[i64; 4]]) -> Result<Point> {
        if columns.is_empty() {
            return Err(Error::Parse("a point needs at least one column".into()));
        }
        let mut p = Point::zero(columns.len());
        for (j, col) in columns.iter().enumerate() {
            for g in GroupElem::ALL {
                let v = col[g.index()];
                if v < 0 {
                    return Err(Error::NegativeCoordinate {
                        column: j,
                        element: g,
                    });
                }
                p.coords[4 * j + g.index()] = v;
            }
        }
        Ok(p)
    }

    /// Builds the point whose j-th multiset contains exactly the listed
    /// elements (with multiplicity).
    pub fn from_multisets(multisets: &[Vec<GroupElem>]) -> Result<Point> {
        if multisets.is_empty() {
            return Err(Error::Parse("a point needs at least one column".into()));
        }
        let mut p = Point::zero(multisets.len());
        for (j, ms) in multisets.iter().enumerate() {
            for &g in ms {
                p.coords[4 * j + g.index()] += 1;
            }
        }
        Ok(p)
    }

    /// Parses the compact G-presentation format: columns separated by `/`,
    /// elements concatenated, e.g. `aab/0bg/ggg`. An empty column segment
    /// denotes an all-zero column.
    pub fn parse_presentation(s: &str) -> Result<Point> {
        let mut multisets = Vec::new();
        for seg in s.split('/') {
            let mut ms = Vec::new();
            for c in seg.trim().chars() {
                let g = GroupElem::from_letter(c)
                    .ok_or_else(|| Error::Parse(format!("invalid element letter `{c}`")))?;
                ms.push(g);
            }
            multisets.push(ms);
        }
        Point::from_multisets(&multisets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, column: usize, g: GroupElem) -> i64 {
        self.coords[4 * column + g.index()]
    }

    pub fn column(&self, column: usize) -> [i64; 4] {
        let mut out = [0; 4];
        out.copy_from_slice(&self.coords[4 * column..4 * column + 4]);
        out
    }

    pub fn column_sum(&self, column: usize) -> i64 {
        self.column(column).iter().sum()
    }

    /// The coordinate multiset of a column, sorted in decreasing order.
    pub fn column_shape(&self, column: usize) -> [i64; 4] {
        let mut c = self.column(column);
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    pub fn column_max(&self, column: usize) -> i64 {
        *self.column(column).iter().max().unwrap()
    }

    /// The elements attaining the maximum of a column, in the fixed
    /// element order.
    pub fn argmax_elements(&self, column: usize) -> Vec<GroupElem> {
        let m = self.column_max(column);
        GroupElem::ALL
            .into_iter()
            .filter(|g| self.get(column, *g) == m)
            .collect()
    }

    /// Sum over all coordinates of `x_g^j * g` in G.
    pub fn group_sum(&self) -> GroupElem {
        let mut acc = GroupElem::Zero;
        for j in 0..self.n {
            for g in GroupElem::ALL {
                if self.get(j, g) % 2 != 0 {
                    acc = acc + g;
                }
            }
        }
        acc
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Point { n: self.n, coords })
    }

    /// Coordinatewise difference, or `None` if any coordinate would go
    /// negative (i.e. `other` is not `self`-good when it is a vertex).
    pub fn try_sub(&self, other: &Point) -> Result<Option<Point>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut coords = Vec::with_capacity(self.coords.len());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if a < b {
                return Ok(None);
            }
            coords.push(a - b);
        }
        Ok(Some(Point { n: self.n, coords }))
    }

    pub fn scale(&self, c: i64) -> Result<Point> {
        if c < 0 {
            return Err(Error::InvalidDegree { min: 0, got: c });
        }
        Ok(Point {
            n: self.n,
            coords: self.coords.iter().map(|v| v * c).collect(),
        })
    }

    /// Exact sum of the vertex points of the given flows.
    pub fn sum_of_vertices(flows: &[Flow]) -> Result<Point> {
        let first = flows
            .first()
            .ok_or_else(|| Error::Parse("need at least one flow to sum".into()))?;
        let mut acc = Point::zero(first.n());
        for f in flows {
            acc = acc.add(&f.vertex_point())?;
        }
        Ok(acc)
    }

    /// Decodes a point whose columns are all singletons back into a flow.
    pub fn as_vertex_flow(&self) -> Option<Flow> {
        let mut entries = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let col = self.column(j);
            if col.iter().sum::<i64>() != 1 {
                return None;
            }
            let g = GroupElem::ALL[col.iter().position(|&v| v == 1).unwrap()];
            entries.push(g);
        }
        Flow::new(entries).ok()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl fmt::Display for Point {
    /// G-presentation form, e.g. `aab/0bg/ggg`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n {
            if j > 0 {
                write!(f, "/")?;
            }
            for g in GroupElem::ALL {
                for _ in 0..self.get(j, g) {
                    write!(f, "{g}")?;
                }
            }
        }
        Ok(())
    }
}

/// JSON encoding of a point: `{"n":…, "k":…, "columns":[[x0,xa,xb,xg],…]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub columns: Vec<[i64; 4]>,
}

impl PointJson {
    pub fn from_point(p: &Point, k: Option<i64>) -> PointJson {
        PointJson {
            n: p.n(),
            k,
            columns: (0..p.n()).map(|j| p.column(j)).collect(),
        }
    }

    pub fn to_point(&self) -> Result<Point> {
        if self.columns.len() != self.n {
            return Err(Error::Parse(format!(
                "declared n={} but {} columns given",
                self.n,
                self.columns.len()
            )));
        }
        Point::from_columns(&self.columns)
    }
}

/// An n-tuple of group elements summing to zero; identifies a vertex of P_n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Flow {
    entries: Vec<GroupElem>,
}

impl Flow {
    pub fn new(entries: Vec<GroupElem>) -> Result<Flow> {
        if entries.is_empty() {
            return Err(Error::Parse("a flow needs at least one entry".into()));
        }
        let sum = entries
            .iter()
            .fold(GroupElem::Zero, |acc, g| acc + *g);
        if !sum.is_zero() {
            return Err(Error::NotAFlow { sum });
        }
        Ok(Flow { entries })
    }

    pub fn zero(n: usize) -> Flow {
        assert!(n >= 1);
        Flow {
            entries: vec![GroupElem::Zero; n],
        }
    }

    /// The flow with `g` at positions `j` and `j2` and zero elsewhere.
    pub fn pair(n: usize, g: GroupElem, j: usize, j2: usize) -> Flow {
        assert!(j != j2 && j < n && j2 < n);
        let mut entries = vec![GroupElem::Zero; n];
        entries[j] = g;
        entries[j2] = g;
        Flow { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[GroupElem] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> GroupElem {
        self.entries[j]
    }

    /// The vertex of P_n this flow identifies: one unit per column.
    pub fn vertex_point(&self) -> Point {
        let mut p = Point::zero(self.n());
        for (j, g) in self.entries.iter().enumerate() {
            p.coords[4 * j + g.index()] = 1;
        }
        p
    }
}

impl fmt::Display for Flow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.entries {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Flow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flow> {
        let mut entries = Vec::with_capacity(s.len());
        for c in s.trim().chars() {
            let g = GroupElem::from_letter(c)
                .ok_or_else(|| Error::Parse(format!("invalid flow letter `{c}`")))?;
            entries.push(g);
        }
        Flow::new(entries)
    }
}

impl Serialize for Flow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Flow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Flow, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All 4^(n-1) flows of length n: the first n-1 entries range freely, the
/// last is forced. Ascending in the fixed element order.
pub fn enumerate_vertices(n: usize) -> Vec<Flow> {
    assert!(n >= 1, "column count must be positive");
    let count = 4usize.checked_pow((n - 1) as u32).expect("vertex count overflow");
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut entries = vec![GroupElem::Zero; n];
        let mut acc = GroupElem::Zero;
        let mut c = code;
        for j in (0..n - 1).rev() {
            entries[j] = GroupElem::from_index(c & 3);
            acc = acc + entries[j];
            c >>= 2;
        }
        entries[n - 1] = acc;
        out.push(Flow { entries });
    }
    out
}

/// The distinguished vertex set V_n: the all-zero flow together with every
/// `v(g)_{j,n}` for nonzero g and j < n-1 (0-based; the last column is n-1).
pub fn distinguished_vertices(n: usize) -> Vec<Flow> {
    assert!(n >= 1);
    let mut out = vec![Flow::zero(n)];
    for j in 0..n.saturating_sub(1) {
        for g in GroupElem::NONZERO {
            out.push(Flow::pair(n, g, j, n - 1));
        }
    }
    out
}

/// Returns the common column sum k when the point lies in the vertex
/// lattice L_n (equal column sums and total group sum zero), else `None`.
pub fn lattice_degree(x: &Point) -> Option<i64> {
    let k = x.column_sum(0);
    for j in 1..x.n() {
        if x.column_sum(j) != k {
            return None;
        }
    }
    if x.group_sum().is_zero() {
        Some(k)
    } else {
        None
    }
}

/// A subset of the columns with odd cardinality, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct OddSubset {
    n: usize,
    mask: u64,
}

impl OddSubset {
    /// `columns` are 0-based and must be distinct.
    pub fn new(n: usize, columns: &[usize]) -> Result<OddSubset> {
        let mut mask = 0u64;
        for &c in columns {
            if c >= n || n > 64 {
                return Err(Error::DimensionMismatch { expected: n, got: c });
            }
            if mask & (1 << c) != 0 {
                return Err(Error::Parse(format!("duplicate column {c} in subset")));
            }
            mask |= 1 << c;
        }
        OddSubset::from_mask(n, mask)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<OddSubset> {
        let card = mask.count_ones() as usize;
        if card % 2 == 0 {
            return Err(Error::EvenSubset { cardinality: card });
        }
        Ok(OddSubset { n, mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn cardinality(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, column: usize) -> bool {
        self.mask & (1 << column) != 0
    }

    /// Member columns, 0-based ascending.
    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|j| self.contains(*j)).collect()
    }
}

impl fmt::Display for OddSubset {
    /// 1-based set notation, e.g. `{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, j) in self.members().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, "}}")
    }
}

/// All odd-cardinality subsets of the n columns, ascending by bitmask.
pub fn odd_subsets(n: usize) -> impl Iterator<Item = OddSubset> {
    assert!(n >= 1 && n < 63);
    (1u64..1 << n).filter_map(move |mask| OddSubset::from_mask(n, mask).ok())
}

/// Identifies one facet form: a nonzero element and an odd column subset.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct FacetId {
    g: GroupElem,
    a: OddSubset,
}

impl FacetId {
    pub fn new(g: GroupElem, a: OddSubset) -> Result<FacetId> {
        if g.is_zero() {
            return Err(Error::ZeroFacetElement);
        }
        Ok(FacetId { g, a })
    }

    pub fn element(&self) -> GroupElem {
        self.g
    }

    pub fn subset(&self) -> &OddSubset {
        &self.a
    }
}

impl fmt::Display for FacetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.a)
    }
}

impl Serialize for FacetId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FacetId", 2)?;
        st.serialize_field("g", &self.g)?;
        let one_based: Vec<usize> = self.a.members().iter().map(|j| j + 1).collect();
        st.serialize_field("A", &one_based)?;
        st.end()
    }
}

/// Evaluates the facet form S_g(x, A): columns in A contribute the pair
/// `{0, g}`, columns outside A contribute the complementary nonzero pair.
pub fn eval_s(x: &Point, a: &OddSubset, g: GroupElem) -> Result<i64> {
    if g.is_zero() {
        return Err(Error::ZeroFacetElement);
    }
    if a.n() != x.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            got: a.n(),
        });
    }
    let (h1, h2) = g.complement_pair();
    let mut total = 0;
    for j in 0..x.n() {
        total += if a.contains(j) {
            x.get(j, GroupElem::Zero) + x.get(j, g)
        } else {
            x.get(j, h1) + x.get(j, h2)
        };
    }
    Ok(total)
}

/// Why a point fell outside the k-th dilation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MembershipFailure {
    ColumnSum { column: usize, sum: i64 },
    Facet { facet: FacetId, value: i64 },
}

impl fmt::Display for MembershipFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipFailure::ColumnSum { column, sum } => {
                write!(f, "column {} sums to {}", column + 1, sum)
            }
            MembershipFailure::Facet { facet, value } => {
                write!(f, "facet form S{} = {}", facet, value)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Membership {
    Member,
    NotMember(MembershipFailure),
}

impl Membership {
    pub fn holds(&self) -> bool {
        matches!(self, Membership::Member)
    }

    pub fn failure(&self) -> Option<&MembershipFailure> {
        match self {
            Membership::Member => None,
            Membership::NotMember(v) => Some(v),
        }
    }
}

/// Membership of `x` in k*P_n, scanning every column sum and all
/// 3 * 2^(n-1) facet forms. Uses the default column cap.
pub fn is_member(x: &Point, k: i64) -> Result<Membership> {
    is_member_capped(x, k, DEFAULT_COLUMN_CAP)
}

/// Same as [`is_member`] with an explicit cap on the column count.
pub fn is_member_capped(x: &Point, k: i64, cap: usize) -> Result<Membership> {
    let n = x.n();
    if n > cap {
        return Err(Error::DimensionTooLarge { n, cap });
    }
    for j in 0..n {
        let s = x.column_sum(j);
        if s != k {
            return Ok(Membership::NotMember(MembershipFailure::ColumnSum {
                column: j,
                sum: s,
            }));
        }
    }
    // Per element g: in_pair[j] = x_0^j + x_g^j, out_pair[j] the complement
    // pair, and S_g(A) = sum(out_pair) + sum_{j in A}(in_pair - out_pair).
    let mut diff = vec![[0i64; 3]; n];
    let mut base = [0i64; 3];
    for (gi, g) in GroupElem::NONZERO.into_iter().enumerate() {
        let (h1, h2) = g.complement_pair();
        for (j, d) in diff.iter_mut().enumerate() {
            let inside = x.get(j, GroupElem::Zero) + x.get(j, g);
            let outside = x.get(j, h1) + x.get(j, h2);
            d[gi] = inside - outside;
            base[gi] += outside;
        }
    }
    for mask in 1u64..1 << n {
        if mask.count_ones() % 2 == 0 {
            continue;
        }
        let mut s = base;
        let mut bits = mask;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for gi in 0..3 {
                s[gi] += diff[j][gi];
            }
        }
        for (gi, g) in GroupElem::NONZERO.into_iter().enumerate() {
            if s[gi] < k {
                let a = OddSubset::from_mask(n, mask).expect("odd by construction");
                let facet = FacetId::new(g, a).expect("nonzero element");
                return Ok(Membership::NotMember(MembershipFailure::Facet {
                    facet,
                    value: s[gi],
                }));
            }
        }
    }
    Ok(Membership::Member)
}

/// Whether a member of k*P_n lies on the dilated facet `k*F_g(A)`.
pub fn lies_on_dilated_facet(x: &Point, k: i64, facet: &FacetId) -> Result<bool> {
    match is_member(x, k)? {
        Membership::Member => Ok(eval_s(x, facet.subset(), facet.element())? == k),
        Membership::NotMember(failure) => Err(Error::NotAMember { k, failure }),
    }
}

/// Checks the parity identity S_g(x, A) = k mod 2 for a lattice point with
/// common column sum k. A test oracle, not control flow.
pub fn parity_matches(x: &Point, k: i64, a: &OddSubset, g: GroupElem) -> Result<bool> {
    match lattice_degree(x) {
        Some(found) if found == k => {}
        Some(found) => return Err(Error::WrongColumnSum { expected: k, found }),
        None => return Err(Error::NotInLattice),
    }
    Ok((eval_s(x, a, g)? - k) % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElem::{Alpha, Beta, Gamma, Zero};

    fn flow(s: &str) -> Flow {
        s.parse().unwrap()
    }

    #[test]
    fn vertex_of_examples() {
        let v = flow("000").vertex_point();
        for j in 0..3 {
            assert_eq!(v.get(j, Zero), 1);
            assert_eq!(v.column_sum(j), 1);
        }
        let v = flow("a0a").vertex_point();
        assert_eq!(v.get(0, Alpha), 1);
        assert_eq!(v.get(1, Zero), 1);
        assert_eq!(v.get(2, Alpha), 1);
        assert!(matches!(
            "ab".parse::<Flow>(),
            Err(Error::NotAFlow { sum: Gamma })
        ));
    }

    #[test]
    fn enumerate_vertices_counts() {
        assert_eq!(enumerate_vertices(1), vec![Flow::zero(1)]);
        let v2: Vec<String> = enumerate_vertices(2).iter().map(Flow::to_string).collect();
        assert_eq!(v2, ["00", "aa", "bb", "gg"]);
        let v3 = enumerate_vertices(3);
        assert_eq!(v3.len(), 16);
        let distinct: std::collections::HashSet<_> = v3.iter().collect();
        assert_eq!(distinct.len(), 16);
        for f in &v3 {
            // each enumerated tuple really is a flow
            assert!(Flow::new(f.entries().to_vec()).is_ok());
        }
    }

    #[test]
    fn distinguished_vertex_set() {
        let v4 = distinguished_vertices(4);
        assert_eq!(v4.len(), 1 + 3 * 3);
        assert_eq!(v4[0], Flow::zero(4));
        assert!(v4.contains(&flow("a00a")));
        assert!(v4.contains(&flow("00gg")));
        assert_eq!(distinguished_vertices(1), vec![Flow::zero(1)]);
    }

    #[test]
    fn lattice_degree_examples() {
        assert_eq!(lattice_degree(&flow("0000").vertex_point()), Some(1));
        let x = Point::parse_presentation("aa/bb").unwrap();
        assert_eq!(lattice_degree(&x), Some(2));
        let y = Point::parse_presentation("a/b").unwrap();
        assert_eq!(lattice_degree(&y), None);
        let unequal = Point::parse_presentation("aa/b0").unwrap();
        assert_eq!(lattice_degree(&unequal), Some(2));
        let ragged = Point::parse_presentation("aa/b").unwrap();
        assert_eq!(lattice_degree(&ragged), None);
    }

    #[test]
    fn eval_s_examples() {
        let v0 = flow("0").vertex_point();
        let a = OddSubset::new(1, &[0]).unwrap();
        assert_eq!(eval_s(&v0, &a, Alpha).unwrap(), 1);

        let v = flow("aa").vertex_point();
        let a1 = OddSubset::new(2, &[0]).unwrap();
        assert_eq!(eval_s(&v, &a1, Beta).unwrap(), 1);

        let x = Point::parse_presentation("aa/bb").unwrap();
        assert_eq!(eval_s(&x, &a1, Beta).unwrap(), 0);

        assert!(eval_s(&x, &a1, Zero).is_err());
        let wrong_n = OddSubset::new(3, &[0]).unwrap();
        assert!(eval_s(&x, &wrong_n, Alpha).is_err());
    }

    #[test]
    fn eval_s_additive() {
        let x = Point::parse_presentation("0ab/abg/ggg").unwrap();
        let y = Point::parse_presentation("ab/0g/b0").unwrap();
        let y = y; // same n
        let s = x.add(&y).unwrap();
        for a in odd_subsets(3) {
            for g in GroupElem::NONZERO {
                assert_eq!(
                    eval_s(&s, &a, g).unwrap(),
                    eval_s(&x, &a, g).unwrap() + eval_s(&y, &a, g).unwrap()
                );
            }
        }
    }

    #[test]
    fn membership_examples() {
        let x = Point::sum_of_vertices(&[flow("aa"), flow("gg")]).unwrap();
        assert!(is_member(&x, 2).unwrap().holds());

        let bad = Point::parse_presentation("aa/bb").unwrap();
        match is_member(&bad, 2).unwrap() {
            Membership::NotMember(MembershipFailure::Facet { facet, value }) => {
                assert_eq!(facet.element(), Beta);
                assert_eq!(facet.subset().members(), vec![0]);
                assert_eq!(value, 0);
            }
            other => panic!("expected facet violation, got {other:?}"),
        }

        let v0 = flow("00").vertex_point();
        match is_member(&v0, 2).unwrap() {
            Membership::NotMember(MembershipFailure::ColumnSum { column, sum }) => {
                assert_eq!(column, 0);
                assert_eq!(sum, 1);
            }
            other => panic!("expected column-sum violation, got {other:?}"),
        }
    }

    #[test]
    fn membership_matches_direct_eval() {
        // the optimized scan must agree with eval_s on every facet form
        let x = Point::sum_of_vertices(&[flow("abg0"), flow("a0ab"), flow("0bbg")]).unwrap();
        assert!(is_member(&x, 3).unwrap().holds());
        for a in odd_subsets(4) {
            for g in GroupElem::NONZERO {
                assert!(eval_s(&x, &a, g).unwrap() >= 3);
            }
        }
    }

    #[test]
    fn membership_closed_under_addition() {
        let a = Point::sum_of_vertices(&[flow("abg"), flow("000")]).unwrap();
        let b = Point::sum_of_vertices(&[flow("gg0"), flow("a0a"), flow("bga")]).unwrap();
        assert!(is_member(&a, 2).unwrap().holds());
        assert!(is_member(&b, 3).unwrap().holds());
        let s = a.add(&b).unwrap();
        assert!(is_member(&s, 5).unwrap().holds());
    }

    #[test]
    fn vertices_satisfy_all_facets() {
        for n in 1..=4 {
            for f in enumerate_vertices(n) {
                let p = f.vertex_point();
                assert!(is_member(&p, 1).unwrap().holds(), "vertex {f} fails");
            }
        }
    }

    #[test]
    fn dilated_facet_examples() {
        let v0 = flow("0").vertex_point();
        let f = FacetId::new(Alpha, OddSubset::new(1, &[0]).unwrap()).unwrap();
        assert!(lies_on_dilated_facet(&v0, 1, &f).unwrap());

        let v = flow("aa").vertex_point();
        let f = FacetId::new(Alpha, OddSubset::new(2, &[0]).unwrap()).unwrap();
        assert!(lies_on_dilated_facet(&v, 1, &f).unwrap());

        let x = Point::sum_of_vertices(&[flow("00"), flow("aa")]).unwrap();
        let f = FacetId::new(Gamma, OddSubset::new(2, &[0]).unwrap()).unwrap();
        assert!(lies_on_dilated_facet(&x, 2, &f).unwrap());

        let outside = Point::parse_presentation("aa/bb").unwrap();
        assert!(lies_on_dilated_facet(&outside, 2, &f).is_err());
    }

    #[test]
    fn parity_examples() {
        // every flow vertex has odd S at k = 1
        for f in enumerate_vertices(3) {
            let p = f.vertex_point();
            for a in odd_subsets(3) {
                for g in GroupElem::NONZERO {
                    assert!(parity_matches(&p, 1, &a, g).unwrap());
                    assert_eq!(eval_s(&p, &a, g).unwrap() % 2, 1);
                }
            }
        }
        let x = Point::sum_of_vertices(&[flow("0"), flow("0")]).unwrap();
        let a = OddSubset::new(1, &[0]).unwrap();
        assert_eq!(eval_s(&x, &a, Alpha).unwrap(), 2);
        assert!(parity_matches(&x, 2, &a, Alpha).unwrap());
        assert!(parity_matches(&x, 3, &a, Alpha).is_err());
    }

    #[test]
    fn odd_subset_validation() {
        assert!(OddSubset::new(3, &[0, 1]).is_err());
        assert!(OddSubset::new(3, &[0, 0, 1]).is_err());
        assert!(OddSubset::new(3, &[5]).is_err());
        let a = OddSubset::new(4, &[0, 2, 3]).unwrap();
        assert_eq!(a.cardinality(), 3);
        assert_eq!(a.to_string(), "{1,3,4}");
        assert_eq!(odd_subsets(3).count(), 4);
        assert_eq!(odd_subsets(4).count(), 8);
    }

    #[test]
    fn membership_cap() {
        let x = Point::zero(30);
        assert!(matches!(
            is_member(&x, 0),
            Err(Error::DimensionTooLarge { n: 30, cap: 24 })
        ));
        assert!(is_member_capped(&Point::zero(2), 0, 24).unwrap().holds());
    }

    #[test]
    fn presentation_roundtrip() {
        let x = Point::parse_presentation("aab/0bg/ggg").unwrap();
        assert_eq!(x.get(0, Alpha), 2);
        assert_eq!(x.get(1, Zero), 1);
        assert_eq!(x.to_string(), "aab/0bg/ggg");
        let y = Point::parse_presentation(&x.to_string()).unwrap();
        assert_eq!(x, y);
        // empty segment is an all-zero column
        let z = Point::parse_presentation("aa//bb").unwrap();
        assert_eq!(z.column_sum(1), 0);
    }

    #[test]
    fn point_json_roundtrip() {
        let x = Point::parse_presentation("aab/0bg").unwrap();
        let j = PointJson::from_point(&x, Some(3));
        let s = serde_json::to_string(&j).unwrap();
        let back: PointJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_point().unwrap(), x);
        assert_eq!(back.k, Some(3));
    }
}
