//! Sparse operators between tensor products of `S` and `V₁`.
//!
//! A basis key packs one factor per byte, factor `t` in bits `8t..8t+8`.
//! Entries are Laurent polynomials over a single common denominator, so
//! composition never needs a polynomial gcd.

use crate::qalg::{Int, Laurent, RatFunc};
use std::collections::BTreeMap;
use std::ops::{Add, Sub};

pub type Key = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// The spin representation, basis indexed by subsets of `{1..n}` as bitmasks.
    S,
    /// The vector representation, basis `a_1..a_n, u, b_n..b_1` as `0..=2n`.
    V,
}

impl Factor {
    pub fn dim(self, n: usize) -> usize {
        match self {
            Factor::S => 1 << n,
            Factor::V => 2 * n + 1,
        }
    }
}

pub type Sig = Vec<Factor>;

pub fn sig_s(m: usize) -> Sig {
    vec![Factor::S; m]
}

#[inline]
pub fn get(key: Key, t: usize) -> usize {
    ((key >> (8 * t)) & 0xff) as usize
}

#[inline]
pub fn set(key: Key, t: usize, val: usize) -> Key {
    (key & !(0xffu64 << (8 * t))) | ((val as u64) << (8 * t))
}

pub fn pack(parts: &[usize]) -> Key {
    parts.iter().enumerate().fold(0, |k, (t, &p)| k | ((p as u64) << (8 * t)))
}

pub fn unpack(key: Key, m: usize) -> Vec<usize> {
    (0..m).map(|t| get(key, t)).collect()
}

/// All basis keys of a signature, in lexicographic order of factor tuples.
pub fn basis(sig: &[Factor], n: usize) -> Vec<Key> {
    let mut out = vec![Vec::new()];
    for f in sig {
        let mut next = Vec::with_capacity(out.len() * f.dim(n));
        for prefix in &out {
            for x in 0..f.dim(n) {
                let mut p: Vec<usize> = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    out.iter().map(|p| pack(p)).collect()
}

/// Sparse vector with a common denominator.
#[derive(Clone, Debug)]
pub struct SVec {
    pub den: Laurent,
    pub map: BTreeMap<Key, Laurent>,
}

impl SVec {
    pub fn zero() -> SVec {
        SVec { den: Laurent::one(), map: BTreeMap::new() }
    }

    pub fn basis(key: Key) -> SVec {
        let mut map = BTreeMap::new();
        map.insert(key, Laurent::one());
        SVec { den: Laurent::one(), map }
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.map.len()
    }

    pub fn get(&self, key: Key) -> RatFunc {
        match self.map.get(&key) {
            Some(c) => RatFunc::new(c.clone(), self.den.clone()),
            None => RatFunc::zero(),
        }
    }

    pub fn scale(&self, r: &RatFunc) -> SVec {
        if r.is_zero() {
            return SVec::zero();
        }
        SVec {
            den: &self.den * r.den(),
            map: self.map.iter().map(|(k, c)| (*k, c * r.num())).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Laurent) -> SVec {
        if p.is_zero() {
            return SVec::zero();
        }
        SVec { den: self.den.clone(), map: self.map.iter().map(|(k, c)| (*k, c * p)).collect() }
    }

    /// Exact equality of the represented vectors.
    pub fn same(&self, other: &SVec) -> bool {
        let keys: std::collections::BTreeSet<Key> = self.map.keys().chain(other.map.keys()).copied().collect();
        let z = Laurent::zero();
        keys.into_iter().all(|k| {
            let a = self.map.get(&k).unwrap_or(&z);
            let b = other.map.get(&k).unwrap_or(&z);
            a * &other.den == b * &self.den
        })
    }

    /// First key where the two vectors differ.
    pub fn first_difference(&self, other: &SVec) -> Option<Key> {
        let keys: std::collections::BTreeSet<Key> = self.map.keys().chain(other.map.keys()).copied().collect();
        let z = Laurent::zero();
        keys.into_iter().find(|k| {
            let a = self.map.get(k).unwrap_or(&z);
            let b = other.map.get(k).unwrap_or(&z);
            a * &other.den != b * &self.den
        })
    }

    /// Divide out the common factor of the denominator and all entries.
    pub fn reduce(&mut self) {
        reduce_parts(&mut self.den, self.map.values_mut().collect());
    }
}

fn reduce_parts(den: &mut Laurent, mut entries: Vec<&mut Laurent>) {
    if entries.is_empty() {
        *den = Laurent::one();
        return;
    }
    let mut g = den.clone();
    for e in entries.iter() {
        if g.is_one() {
            break;
        }
        g = g.gcd(e);
    }
    if !g.is_one() && !g.is_zero() {
        *den = den.div_exact(&g).expect("gcd divides denominator");
        for e in entries.iter_mut() {
            **e = e.div_exact(&g).expect("gcd divides entry");
        }
    }
    let s = den.low();
    let neg = den.leading().signum() < 0;
    if s != 0 || neg {
        let sign = if neg { Int::from(-1) } else { Int::ONE };
        *den = den.shift(-s).scale(&sign);
        for e in entries.iter_mut() {
            **e = e.shift(-s).scale(&sign);
        }
    }
}

impl Add<&SVec> for &SVec {
    type Output = SVec;
    fn add(self, rhs: &SVec) -> SVec {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (den, ls, rs) = if self.den == rhs.den {
            (self.den.clone(), Laurent::one(), Laurent::one())
        } else {
            (&self.den * &rhs.den, rhs.den.clone(), self.den.clone())
        };
        let mut map: BTreeMap<Key, Laurent> = BTreeMap::new();
        for (k, c) in &self.map {
            map.entry(*k).or_default().add_mul(c, &ls);
        }
        for (k, c) in &rhs.map {
            map.entry(*k).or_default().add_mul(c, &rs);
        }
        map.retain(|_, c| !c.is_zero());
        SVec { den, map }
    }
}

impl Sub<&SVec> for &SVec {
    type Output = SVec;
    fn sub(self, rhs: &SVec) -> SVec {
        self + &rhs.scale_poly(&Laurent::constant(-1))
    }
}

/// Sparse linear map `dom → cod` with a common denominator.
#[derive(Clone, Debug)]
pub struct LinOp {
    pub n: usize,
    pub dom: Sig,
    pub cod: Sig,
    pub den: Laurent,
    pub cols: BTreeMap<Key, BTreeMap<Key, Laurent>>,
}

impl LinOp {
    pub fn zero(n: usize, dom: Sig, cod: Sig) -> LinOp {
        LinOp { n, dom, cod, den: Laurent::one(), cols: BTreeMap::new() }
    }

    pub fn identity(n: usize, sig: Sig) -> LinOp {
        let mut op = LinOp::zero(n, sig.clone(), sig.clone());
        for k in basis(&sig, n) {
            op.cols.insert(k, BTreeMap::from([(k, Laurent::one())]));
        }
        op
    }

    /// Diagonal operator from a per-key function.
    pub fn diagonal(n: usize, sig: Sig, f: impl Fn(Key) -> Laurent) -> LinOp {
        let mut op = LinOp::zero(n, sig.clone(), sig.clone());
        for k in basis(&sig, n) {
            let c = f(k);
            if !c.is_zero() {
                op.cols.insert(k, BTreeMap::from([(k, c)]));
            }
        }
        op
    }

    /// Set entry `(row, col)` to `c / den` (assumes `den = 1` or a shared denominator).
    pub fn insert(&mut self, row: Key, col: Key, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let e = self.cols.entry(col).or_default().entry(row).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.cols.get_mut(&col).unwrap().remove(&row);
        }
    }

    pub fn entry(&self, row: Key, col: Key) -> RatFunc {
        match self.cols.get(&col).and_then(|c| c.get(&row)) {
            Some(c) => RatFunc::new(c.clone(), self.den.clone()),
            None => RatFunc::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(|c| c.len()).sum()
    }

    pub fn column(&self, col: Key) -> SVec {
        SVec { den: self.den.clone(), map: self.cols.get(&col).cloned().unwrap_or_default() }
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        apply_at(self, 0, v)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinOp) -> LinOp {
        assert_eq!(self.dom, rhs.cod, "composition signature mismatch");
        let mut out = LinOp::zero(self.n, rhs.dom.clone(), self.cod.clone());
        out.den = &self.den * &rhs.den;
        for (k, col) in &rhs.cols {
            let mut acc: BTreeMap<Key, Laurent> = BTreeMap::new();
            for (j, c) in col {
                if let Some(acol) = self.cols.get(j) {
                    for (i, a) in acol {
                        acc.entry(*i).or_default().add_mul(a, c);
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            if !acc.is_empty() {
                out.cols.insert(*k, acc);
            }
        }
        out
    }

    pub fn scale(&self, r: &RatFunc) -> LinOp {
        let mut out = LinOp::zero(self.n, self.dom.clone(), self.cod.clone());
        if r.is_zero() {
            return out;
        }
        out.den = &self.den * r.den();
        for (k, col) in &self.cols {
            out.cols.insert(*k, col.iter().map(|(i, c)| (*i, c * r.num())).collect());
        }
        out
    }

    pub fn add(&self, rhs: &LinOp) -> LinOp {
        assert_eq!(self.dom, rhs.dom);
        assert_eq!(self.cod, rhs.cod);
        let (den, ls, rs) = if self.den == rhs.den {
            (self.den.clone(), Laurent::one(), Laurent::one())
        } else {
            (&self.den * &rhs.den, rhs.den.clone(), self.den.clone())
        };
        let mut out = LinOp::zero(self.n, self.dom.clone(), self.cod.clone());
        out.den = den;
        for (src, s) in [(self, &ls), (rhs, &rs)] {
            for (k, col) in &src.cols {
                let dst = out.cols.entry(*k).or_default();
                for (i, c) in col {
                    dst.entry(*i).or_default().add_mul(c, s);
                }
            }
        }
        for col in out.cols.values_mut() {
            col.retain(|_, c| !c.is_zero());
        }
        out.cols.retain(|_, c| !c.is_empty());
        out
    }

    pub fn sub(&self, rhs: &LinOp) -> LinOp {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.values().all(|c| c.is_empty())
    }

    /// Exact equality as linear maps.
    pub fn same(&self, other: &LinOp) -> bool {
        self.first_difference(other).is_none()
    }

    /// First `(row, col)` where two operators differ.
    pub fn first_difference(&self, other: &LinOp) -> Option<(Key, Key)> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some((0, 0));
        }
        let cols: std::collections::BTreeSet<Key> = self.cols.keys().chain(other.cols.keys()).copied().collect();
        let empty = BTreeMap::new();
        let z = Laurent::zero();
        for k in cols {
            let a = self.cols.get(&k).unwrap_or(&empty);
            let b = other.cols.get(&k).unwrap_or(&empty);
            let rows: std::collections::BTreeSet<Key> = a.keys().chain(b.keys()).copied().collect();
            for r in rows {
                let x = a.get(&r).unwrap_or(&z);
                let y = b.get(&r).unwrap_or(&z);
                if x * &other.den != y * &self.den {
                    return Some((r, k));
                }
            }
        }
        None
    }

    /// Cancel the common factor of the denominator and all entries.
    pub fn reduce(&mut self) {
        reduce_parts(&mut self.den, self.cols.values_mut().flat_map(|c| c.values_mut()).collect());
    }

    pub fn reduced(mut self) -> LinOp {
        self.reduce();
        self
    }

    /// `A ⊗ B`.
    pub fn tensor(&self, rhs: &LinOp) -> LinOp {
        let shift_in = 8 * self.dom.len();
        let shift_out = 8 * self.cod.len();
        let mut dom = self.dom.clone();
        dom.extend(rhs.dom.iter().copied());
        let mut cod = self.cod.clone();
        cod.extend(rhs.cod.iter().copied());
        let mut out = LinOp::zero(self.n, dom, cod);
        out.den = &self.den * &rhs.den;
        for (ka, ca) in &self.cols {
            for (kb, cb) in &rhs.cols {
                let col = ka | (kb << shift_in);
                let mut m = BTreeMap::new();
                for (ia, xa) in ca {
                    for (ib, xb) in cb {
                        m.insert(ia | (ib << shift_out), xa * xb);
                    }
                }
                out.cols.insert(col, m);
            }
        }
        out
    }

    /// Apply entrywise `f` to every Laurent entry (and the denominator).
    pub fn map_entries(&self, f: impl Fn(&Laurent) -> Laurent) -> LinOp {
        let mut out = LinOp::zero(self.n, self.dom.clone(), self.cod.clone());
        out.den = f(&self.den);
        for (k, col) in &self.cols {
            out.cols.insert(*k, col.iter().map(|(i, c)| (*i, f(c))).filter(|(_, c)| !c.is_zero()).collect());
        }
        out
    }

    /// Entries as `(col, row, value)` in canonical order, for golden dumps.
    pub fn triples(&self) -> Vec<(Key, Key, RatFunc)> {
        let mut out = Vec::new();
        for (k, col) in &self.cols {
            for (i, c) in col {
                out.push((*k, *i, RatFunc::new(c.clone(), self.den.clone())));
            }
        }
        out
    }
}

/// Apply `op` to factors `pos .. pos + op.dom.len()` of every key in `v`.
pub fn apply_at(op: &LinOp, pos: usize, v: &SVec) -> SVec {
    let ld = op.dom.len();
    let lc = op.cod.len();
    let low_mask: Key = if pos == 0 { 0 } else { (1u64 << (8 * pos)) - 1 };
    let mid_mask: Key = if ld == 0 { 0 } else if 8 * ld >= 64 { !0 } else { (1u64 << (8 * ld)) - 1 };
    let mut acc: BTreeMap<Key, Laurent> = BTreeMap::new();
    for (key, c) in &v.map {
        let low = key & low_mask;
        let sub = (key >> (8 * pos)) & mid_mask;
        let high = if 8 * (pos + ld) >= 64 { 0 } else { key >> (8 * (pos + ld)) };
        if let Some(col) = op.cols.get(&sub) {
            for (o, x) in col {
                let nk = low | (o << (8 * pos)) | if 8 * (pos + lc) >= 64 { 0 } else { high << (8 * (pos + lc)) };
                acc.entry(nk).or_default().add_mul(c, x);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    SVec { den: &v.den * &op.den, map: acc }
}

/// Apply a chain of local operators, rightmost first.
pub fn apply_chain(chain: &[(&LinOp, usize)], v: &SVec) -> SVec {
    let mut cur = v.clone();
    for (op, pos) in chain.iter().rev() {
        cur = apply_at(op, *pos, &cur);
    }
    cur
}

/// The operator `id^{⊗pos} ⊗ op ⊗ id^{⊗rest}` on a signature, built explicitly.
pub fn embed(op: &LinOp, pos: usize, sig: &[Factor]) -> LinOp {
    let ld = op.dom.len();
    assert_eq!(&sig[pos..pos + ld], &op.dom[..]);
    let mut cod: Sig = sig[..pos].to_vec();
    cod.extend(op.cod.iter().copied());
    cod.extend(sig[pos + ld..].iter().copied());
    let mut out = LinOp::zero(op.n, sig.to_vec(), cod);
    out.den = op.den.clone();
    for k in basis(sig, op.n) {
        let col = apply_at(&LinOp { den: Laurent::one(), ..op.clone() }, pos, &SVec::basis(k));
        if !col.is_zero() {
            out.cols.insert(k, col.map);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip() {
        let k = pack(&[3, 0, 7]);
        assert_eq!(unpack(k, 3), vec![3, 0, 7]);
        assert_eq!(get(set(k, 1, 5), 1), 5);
    }

    #[test]
    fn compose_identity() {
        let id = LinOp::identity(2, sig_s(2));
        let mut a = LinOp::zero(2, sig_s(2), sig_s(2));
        a.insert(pack(&[1, 2]), pack(&[0, 0]), Laurent::q(1));
        assert!(id.compose(&a).same(&a));
        assert!(a.compose(&id).same(&a));
        assert_eq!(basis(&sig_s(2), 2).len(), 16);
    }
}
