//! Brute-force permutation groups for branch-cycle arguments in small degree.
//!
//! A tuple `(σ₁, …, σ_k)` in `Sₙ` with prescribed cycle types and
//! `σ₁⋯σ_k = 1` is a candidate monodromy; the group it generates, when
//! transitive, is a candidate Galois group over `ℚ̄(T)`. Everything here is
//! exhaustive: the first permutation is fixed to one representative of its
//! class (simultaneous conjugation does not change the isomorphism class),
//! the middle ones run over their full classes and the last is forced.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest degree accepted by the enumerators.
pub const MAX_DEGREE: usize = 8;

/// A permutation of `{0, …, n−1}`; displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Precondition("images do not form a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                let b = c[(i + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Precondition(format!("cycle entry out of range 1..={n}")));
                }
                images[a - 1] = (b - 1) as u8;
            }
        }
        Perm::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u8).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self` first, then `o`.
    pub fn then(&self, o: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| o.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// A partition of `n` listed in non-increasing order.
pub type CycleType = Vec<usize>;

/// Degree plus the cycle type over each branch point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BranchData {
    pub n: usize,
    pub types: Vec<CycleType>,
}

impl BranchData {
    pub fn new(n: usize, types: Vec<CycleType>) -> Result<Self> {
        let mut norm = Vec::with_capacity(types.len());
        for mut t in types {
            if t.iter().sum::<usize>() != n || t.contains(&0) {
                return Err(Error::Precondition(format!("cycle type {t:?} is not a partition of {n}")));
            }
            t.sort_unstable_by(|a, b| b.cmp(a));
            norm.push(t);
        }
        Ok(BranchData { n, types: norm })
    }

    /// `Σ_types Σ (e − 1)`.
    pub fn ramification_total(&self) -> usize {
        self.types.iter().map(|t| t.iter().map(|e| e - 1).sum::<usize>()).sum()
    }
}

/// `2g_src − 2 = n(2g_tgt − 2) + Σ(e − 1)`.
pub fn riemann_hurwitz(data: &BranchData, genus_source: i64, genus_target: i64) -> bool {
    2 * genus_source - 2 == data.n as i64 * (2 * genus_target - 2) + data.ramification_total() as i64
}

/// Isomorphism class of a transitive group, by invariant fingerprint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum GroupId {
    Sym(usize),
    Alt(usize),
    Klein4,
    Cyclic(usize),
    Dihedral(usize),
    Other { order: usize, abelian: bool, even: bool },
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Sym(n) => write!(f, "S{n}"),
            GroupId::Alt(n) => write!(f, "A{n}"),
            GroupId::Klein4 => write!(f, "V4"),
            GroupId::Cyclic(k) => write!(f, "C{k}"),
            GroupId::Dihedral(k) => write!(f, "D{k}"),
            GroupId::Other { order, abelian, even } => {
                write!(f, "order-{order}{}{}", if *abelian { "-abelian" } else { "" }, if *even { "-even" } else { "" })
            }
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All elements of the group generated by `gens`.
pub fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

pub fn is_transitive(n: usize, gens: &[Perm]) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Fingerprint of the group generated by `gens` (assumed transitive).
pub fn identify_group(n: usize, gens: &[Perm]) -> GroupId {
    let even = gens.iter().all(Perm::is_even);
    let abelian = gens.iter().all(|a| gens.iter().all(|b| a.then(b) == b.then(a)));
    let elems = closure(n, gens);
    let order = elems.len();
    if order == factorial(n) && n >= 2 {
        return GroupId::Sym(n);
    }
    if n >= 4 && even && 2 * order == factorial(n) {
        return GroupId::Alt(n);
    }
    let max_el = elems.iter().map(Perm::order).max().unwrap_or(1);
    if abelian && max_el == order {
        return GroupId::Cyclic(order);
    }
    if abelian && order == 4 && max_el == 2 {
        return GroupId::Klein4;
    }
    if !abelian && order % 2 == 0 && max_el == order / 2 {
        let involutions = elems.iter().filter(|g| g.order() == 2).count();
        if involutions == order / 2 + usize::from(order % 4 == 0) {
            return GroupId::Dihedral(order / 2);
        }
    }
    GroupId::Other { order, abelian, even }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every permutation of `Sₙ` with cycle type `t`.
pub fn class_of(n: usize, t: &CycleType) -> Vec<Perm> {
    let mut v: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        let p = Perm { images: v.clone() };
        if &p.cycle_type() == t {
            out.push(p);
        }
        if !next_permutation(&mut v) {
            return out;
        }
    }
}

/// A fixed representative of the class with cycle type `t`.
pub fn class_representative(n: usize, t: &CycleType) -> Perm {
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &len in t {
        for i in 0..len {
            images[start + i] = (start + (i + 1) % len) as u8;
        }
        start += len;
    }
    Perm { images }
}

/// Result of enumerating the product-one tuples for some branch data.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Census {
    pub data: BranchData,
    pub tuples: u64,
    pub transitive: u64,
    pub groups: BTreeMap<GroupId, u64>,
    pub exhaustive: bool,
}

impl Census {
    pub fn group_set(&self) -> BTreeSet<GroupId> {
        self.groups.keys().cloned().collect()
    }
}

fn check_limits(data: &BranchData) -> Result<()> {
    if data.n < 2 || data.n > MAX_DEGREE {
        return Err(Error::Precondition(format!("degree {} outside 2..={MAX_DEGREE}", data.n)));
    }
    if data.types.is_empty() || data.types.len() > 4 {
        return Err(Error::Precondition("between 1 and 4 branch types are supported".into()));
    }
    Ok(())
}

/// Enumerates all product-one tuples with the given cycle types.
pub fn census(data: &BranchData) -> Result<Census> {
    check_limits(data)?;
    let n = data.n;
    let k = data.types.len();
    let first = class_representative(n, &data.types[0]);
    let middle: Vec<Vec<Perm>> = data.types[1..k.saturating_sub(1)].iter().map(|t| class_of(n, t)).collect();
    let last_type = &data.types[k - 1];
    let mut out = Census { data: data.clone(), tuples: 0, transitive: 0, groups: BTreeMap::new(), exhaustive: true };
    let mut cache: HashMap<Vec<Perm>, GroupId> = HashMap::new();
    let mut idx = vec![0usize; middle.len()];
    if middle.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let mut gens = vec![first.clone()];
        let mut prod = first.clone();
        for (c, &i) in middle.iter().zip(&idx) {
            prod = prod.then(&c[i]);
            gens.push(c[i].clone());
        }
        let last = prod.inverse();
        if k == 1 {
            if !first.is_identity() {
                return Ok(out);
            }
        } else if &last.cycle_type() == last_type {
            gens.push(last);
        } else {
            gens.clear();
        }
        if !gens.is_empty() {
            out.tuples += 1;
            if is_transitive(n, &gens) {
                out.transitive += 1;
                let mut key = gens.clone();
                key.sort();
                key.dedup();
                let id = cache.entry(key.clone()).or_insert_with(|| identify_group(n, &key)).clone();
                *out.groups.entry(id).or_insert(0) += 1;
            }
        }
        if k == 1 {
            return Ok(out);
        }
        // odometer over the middle classes
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < middle[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// The set of transitive groups realized by product-one tuples.
pub fn realizable_groups(data: &BranchData) -> Result<BTreeSet<GroupId>> {
    Ok(census(data)?.group_set())
}

/// Outcome of the Jordan-lemma check in one degree.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct JordanReport {
    pub n: usize,
    pub census: Census,
    pub holds: bool,
}

pub fn jordan_report(n: usize) -> Result<JordanReport> {
    if n % 2 == 1 || !(4..=MAX_DEGREE).contains(&n) {
        return Err(Error::Precondition(format!("degree must be even in 4..={MAX_DEGREE}, got {n}")));
    }
    let mut three = vec![3];
    three.resize(n - 2, 1);
    let data = BranchData::new(n, vec![vec![n - 1, 1], vec![n - 1, 1], three])?;
    let c = census(&data)?;
    let holds = c.transitive > 0 && c.groups.keys().all(|g| *g == GroupId::Alt(n));
    Ok(JordanReport { n, census: c, holds })
}

/// Every transitive group generated by two `(n−1)`-cycles and a 3-cycle
/// with product one is `Aₙ`.
pub fn jordan_check(n: usize) -> Result<bool> {
    Ok(jordan_report(n)?.holds)
}

/// The four ways to put three even non-identity types over three points
/// in degree 4, with their transitive realizations.
pub fn quartic_cases() -> Result<Vec<Census>> {
    let t31 = vec![3, 1];
    let t22 = vec![2, 2];
    [
        vec![t31.clone(), t31.clone(), t31.clone()],
        vec![t31.clone(), t31.clone(), t22.clone()],
        vec![t31.clone(), t22.clone(), t22.clone()],
        vec![t22.clone(), t22.clone(), t22],
    ]
    .into_iter()
    .map(|t| census(&BranchData::new(4, t)?))
    .collect()
}

/// Everything the `monodromy-report` command prints.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MonodromyReport {
    pub quartic_cases: Vec<Census>,
    pub excluded_triple_empty: bool,
    pub case3_only_klein: bool,
    pub jordan: Vec<JordanReport>,
    pub quintic_cross_check: Census,
    pub riemann_hurwitz_ok: bool,
}

impl MonodromyReport {
    pub fn all_pass(&self) -> bool {
        self.excluded_triple_empty
            && self.case3_only_klein
            && self.riemann_hurwitz_ok
            && self.jordan.iter().all(|j| j.holds)
            && self.quintic_cross_check.groups.keys().all(|g| *g == GroupId::Alt(5))
    }
}

pub fn full_report() -> Result<MonodromyReport> {
    let cases = quartic_cases()?;
    let excluded = cases[2].transitive == 0 && cases[2].tuples == 0;
    let case3 = cases[3].group_set() == BTreeSet::from([GroupId::Klein4]);
    let jordan = [4, 6, 8].into_iter().map(jordan_report).collect::<Result<Vec<_>>>()?;
    let quintic = census(&BranchData::new(5, vec![vec![5], vec![3, 1, 1], vec![5]])?)?;
    let rh = cases.iter().all(|c| riemann_hurwitz(&c.data, 0, 0))
        && (4..=20).step_by(2).all(|n| {
            let mut three = vec![3];
            three.resize(n - 2, 1);
            BranchData::new(n, vec![vec![n - 1, 1], vec![n - 1, 1], three])
                .map(|d| riemann_hurwitz(&d, 0, 0))
                .unwrap_or(false)
        });
    Ok(MonodromyReport {
        quartic_cases: cases,
        excluded_triple_empty: excluded,
        case3_only_klein: case3,
        jordan,
        quintic_cross_check: quintic,
        riemann_hurwitz_ok: rh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(n: usize, t: &[&[usize]]) -> BranchData {
        BranchData::new(n, t.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn perm_basics() {
        let p = Perm::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 1]);
        assert!(p.is_even());
        assert_eq!(p.order(), 3);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.to_string(), "(1 2 3)");
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert_eq!(class_of(4, &vec![2, 2]).len(), 3);
        assert_eq!(class_of(4, &vec![3, 1]).len(), 8);
        assert_eq!(class_representative(5, &vec![3, 2]).cycle_type(), vec![3, 2]);
    }

    #[test]
    fn excluded_triple_is_empty() {
        assert!(realizable_groups(&bd(4, &[&[3, 1], &[2, 2], &[2, 2]])).unwrap().is_empty());
    }

    #[test]
    fn double_transpositions_give_klein() {
        let g = realizable_groups(&bd(4, &[&[2, 2], &[2, 2], &[2, 2]])).unwrap();
        assert_eq!(g, BTreeSet::from([GroupId::Klein4]));
    }

    #[test]
    fn three_cycles_give_a4() {
        let g = realizable_groups(&bd(4, &[&[3, 1], &[3, 1], &[3, 1]])).unwrap();
        assert_eq!(g, BTreeSet::from([GroupId::Alt(4)]));
    }

    #[test]
    fn identification() {
        let c4 = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(identify_group(4, &[c4.clone()]), GroupId::Cyclic(4));
        let t = Perm::from_cycles(4, &[&[1, 3]]).unwrap();
        assert_eq!(identify_group(4, &[c4.clone(), t]), GroupId::Dihedral(4));
        let s = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        assert_eq!(identify_group(4, &[c4, s]), GroupId::Sym(4));
        let r = Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(identify_group(3, &[r]), GroupId::Cyclic(3));
    }

    #[test]
    fn jordan_small() {
        assert!(jordan_check(4).unwrap());
        assert!(jordan_check(6).unwrap());
        assert!(jordan_check(3).is_err());
    }

    #[test]
    fn rh_examples() {
        assert!(riemann_hurwitz(&bd(4, &[&[2, 2], &[2, 2], &[2, 2]]), 0, 0));
        assert!(riemann_hurwitz(&bd(4, &[&[3, 1], &[3, 1], &[3, 1]]), 0, 0));
        assert!(!riemann_hurwitz(&bd(4, &[&[3, 1], &[3, 1]]), 0, 0));
        assert!(BranchData::new(4, vec![vec![3, 2]]).is_err());
    }

    #[test]
    fn order_of_types_irrelevant() {
        let a = realizable_groups(&bd(4, &[&[3, 1], &[3, 1], &[2, 2]])).unwrap();
        let b = realizable_groups(&bd(4, &[&[2, 2], &[3, 1], &[3, 1]])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, BTreeSet::from([GroupId::Alt(4)]));
    }

    #[test]
    fn size_limits() {
        assert!(census(&bd(9, &[&[9]])).is_err());
    }
}
