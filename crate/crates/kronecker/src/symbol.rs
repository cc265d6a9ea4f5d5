//! Decomposition symbols: the field-independent bookkeeping for isomorphism
//! classes of Kronecker modules.
//!
//! A symbol records preprojective indices, preinjective indices and a Segre
//! symbol (multiset of (partition, point degree) pairs) for the regular part.
//! Concrete points never appear here; choosing distinct points of the stated
//! degrees recovers the class of actual modules over a given field.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::partition::Partition;

/// Dimension vector (a, b) of a Kronecker module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub a: u32,
    pub b: u32,
}

impl DimVector {
    pub fn new(a: u32, b: u32) -> Self {
        DimVector { a, b }
    }

    pub fn zero() -> Self {
        DimVector { a: 0, b: 0 }
    }

    /// Componentwise comparison; the partial order used by dimension caps.
    pub fn fits_in(&self, cap: DimVector) -> bool {
        self.a <= cap.a && self.b <= cap.b
    }

    pub fn checked_sub(&self, other: DimVector) -> Option<DimVector> {
        Some(DimVector {
            a: self.a.checked_sub(other.a)?,
            b: self.b.checked_sub(other.b)?,
        })
    }
}

impl std::ops::Add for DimVector {
    type Output = DimVector;
    fn add(self, rhs: DimVector) -> DimVector {
        DimVector {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// One tube's worth of regular structure: a nonempty partition of regular
/// lengths at a point of the stated degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegreEntry {
    pub partition: Partition,
    pub degree: u32,
}

impl SegreEntry {
    pub fn new(partition: Partition, degree: u32) -> Self {
        assert!(partition.nonzero_len() > 0, "Segre entries need a nonempty partition");
        assert!(degree >= 1, "point degrees are >= 1");
        let partition = partition.trimmed_partition();
        SegreEntry { partition, degree }
    }

    /// Contribution to both coordinates of the dimension vector.
    pub fn weight(&self) -> u32 {
        self.partition.weight() * self.degree
    }
}

impl PartialOrd for SegreEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SegreEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, &self.partition).cmp(&(other.degree, &other.partition))
    }
}

/// Multiset of Segre entries in canonical (degree, partition) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SegreSymbol {
    entries: Vec<SegreEntry>,
}

impl SegreSymbol {
    pub fn new(mut entries: Vec<SegreEntry>) -> Self {
        entries.sort();
        SegreSymbol { entries }
    }

    pub fn empty() -> Self {
        SegreSymbol::default()
    }

    pub fn entries(&self) -> &[SegreEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total regular weight: the common value of both dimension coordinates.
    pub fn weight(&self) -> u32 {
        self.entries.iter().map(SegreEntry::weight).sum()
    }

    /// Multiset union.
    pub fn merged_with(&self, other: &SegreSymbol) -> SegreSymbol {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        SegreSymbol::new(entries)
    }
}

/// Decomposition symbol: preprojective indices, regular Segre symbol,
/// preinjective indices. Zero indices are meaningful (P_0, I_0 summands).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DecompSymbol {
    proj: Vec<u32>,
    inj: Vec<u32>,
    regular: SegreSymbol,
}

impl DecompSymbol {
    pub fn new(mut proj: Vec<u32>, regular: SegreSymbol, mut inj: Vec<u32>) -> Self {
        proj.sort_unstable_by(|x, y| y.cmp(x));
        inj.sort_unstable_by(|x, y| y.cmp(x));
        DecompSymbol { proj, inj, regular }
    }

    /// The class of the zero module.
    pub fn zero() -> Self {
        DecompSymbol::default()
    }

    pub fn from_proj(indices: Vec<u32>) -> Self {
        DecompSymbol::new(indices, SegreSymbol::empty(), vec![])
    }

    pub fn from_inj(indices: Vec<u32>) -> Self {
        DecompSymbol::new(vec![], SegreSymbol::empty(), indices)
    }

    pub fn from_regular(regular: SegreSymbol) -> Self {
        DecompSymbol::new(vec![], regular, vec![])
    }

    /// Preinjective part from a partition, keeping recorded zero parts.
    pub fn inj_from_partition(p: &Partition) -> Self {
        DecompSymbol::from_inj(p.parts().to_vec())
    }

    pub fn proj_from_partition(p: &Partition) -> Self {
        DecompSymbol::from_proj(p.parts().to_vec())
    }

    /// Preprojective indices, weakly decreasing.
    pub fn proj(&self) -> &[u32] {
        &self.proj
    }

    /// Preinjective indices, weakly decreasing.
    pub fn inj(&self) -> &[u32] {
        &self.inj
    }

    pub fn regular(&self) -> &SegreSymbol {
        &self.regular
    }

    pub fn is_zero(&self) -> bool {
        self.proj.is_empty() && self.inj.is_empty() && self.regular.is_empty()
    }

    pub fn dim_vector(&self) -> DimVector {
        let mut d = DimVector::zero();
        for &n in &self.proj {
            d = d + DimVector::new(n + 1, n);
        }
        for &n in &self.inj {
            d = d + DimVector::new(n, n + 1);
        }
        let w = self.regular.weight();
        d + DimVector::new(w, w)
    }

    /// Defect: b - a. Equals #preinjective - #preprojective summands.
    pub fn defect(&self) -> i64 {
        let d = self.dim_vector();
        d.b as i64 - d.a as i64
    }

    /// Direct sum of symbols (classes with disjoint point supports).
    pub fn direct_sum(&self, other: &DecompSymbol) -> DecompSymbol {
        let mut proj = self.proj.clone();
        proj.extend_from_slice(&other.proj);
        let mut inj = self.inj.clone();
        inj.extend_from_slice(&other.inj);
        DecompSymbol::new(proj, self.regular.merged_with(&other.regular), inj)
    }
}

impl PartialOrd for DecompSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DecompSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.proj, &self.inj, &self.regular).cmp(&(&other.proj, &other.inj, &other.regular))
    }
}

impl fmt::Display for DecompSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if !self.proj.is_empty() {
            let toks: Vec<String> = self.proj.iter().map(|n| format!("P{n}")).collect();
            s.push_str(&toks.join(" "));
            s.push(' ');
        }
        s.push('|');
        if !self.regular.is_empty() {
            s.push(' ');
            let toks: Vec<String> = self
                .regular
                .entries()
                .iter()
                .map(|e| format!("{}@{}", e.partition, e.degree))
                .collect();
            s.push_str(&toks.join(" "));
            s.push(' ');
        }
        s.push('|');
        if !self.inj.is_empty() {
            s.push(' ');
            let toks: Vec<String> = self.inj.iter().map(|n| format!("I{n}")).collect();
            s.push_str(&toks.join(" "));
        }
        f.write_str(&s)
    }
}

impl FromStr for DecompSymbol {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_symbol(s)
    }
}

/// Parses the symbol grammar `projpart "|" regpart "|" injpart`; whitespace
/// is insignificant. `"||"` is the zero symbol.
pub fn parse_symbol(s: &str) -> Result<DecompSymbol, ParseError> {
    let bars: Vec<usize> = s
        .char_indices()
        .filter(|&(_, c)| c == '|')
        .map(|(i, _)| i)
        .collect();
    if bars.len() != 2 {
        return Err(ParseError::at(
            s.len().min(bars.first().copied().unwrap_or(0)),
            format!("expected exactly 2 '|' separators, found {}", bars.len()),
        ));
    }
    let proj = parse_indexed(&s[..bars[0]], 0, 'P')?;
    let regular = parse_regpart(&s[bars[0] + 1..bars[1]], bars[0] + 1)?;
    let inj = parse_indexed(&s[bars[1] + 1..], bars[1] + 1, 'I')?;
    Ok(DecompSymbol::new(proj, regular, inj))
}

fn parse_indexed(s: &str, base: usize, letter: char) -> Result<Vec<u32>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c != letter {
            return Err(ParseError::at(base + i, format!("expected '{letter}', found {c:?}")));
        }
        it.next();
        let start = i + c.len_utf8();
        let mut end = start;
        while let Some(&(j, d)) = it.peek() {
            if d.is_ascii_digit() {
                end = j + 1;
                it.next();
            } else {
                break;
            }
        }
        if end == start {
            return Err(ParseError::at(base + start, format!("expected digits after '{letter}'")));
        }
        let n: u32 = s[start..end]
            .parse()
            .map_err(|_| ParseError::at(base + start, "index out of range"))?;
        out.push(n);
    }
    Ok(out)
}

fn parse_regpart(s: &str, base: usize) -> Result<SegreSymbol, ParseError> {
    let mut entries = Vec::new();
    let mut rest = s;
    let mut offset = 0usize;
    loop {
        let trimmed_len = rest.len() - rest.trim_start().len();
        rest = rest.trim_start();
        offset += trimmed_len;
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(ParseError::at(base + offset, "expected '(' starting a partition"));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| ParseError::at(base + offset, "unterminated partition"))?;
        let part: Partition = rest[..=close]
            .parse()
            .map_err(|e: ParseError| ParseError::at(base + offset + e.pos, e.msg))?;
        if part.nonzero_len() != part.len() || part.is_empty() {
            return Err(ParseError::at(
                base + offset,
                "Segre entry partitions must be nonempty with parts >= 1",
            ));
        }
        let after = &rest[close + 1..];
        let after = after.trim_start();
        if !after.starts_with('@') {
            return Err(ParseError::at(base + offset + close + 1, "expected '@degree'"));
        }
        let digits: String = after[1..].chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(ParseError::at(base + offset + close + 2, "expected digits after '@'"));
        }
        let degree: u32 = digits
            .parse()
            .map_err(|_| ParseError::at(base + offset + close + 2, "degree out of range"))?;
        if degree == 0 {
            return Err(ParseError::at(base + offset + close + 2, "degree must be >= 1"));
        }
        entries.push(SegreEntry::new(part, degree));
        let consumed = rest.len() - after.len() + 1 + digits.len();
        offset += consumed;
        rest = &s[offset..];
    }
    Ok(SegreSymbol::new(entries))
}

/// Finite set of decomposition symbols in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolSet {
    set: BTreeSet<DecompSymbol>,
}

impl SymbolSet {
    pub fn new() -> Self {
        SymbolSet::default()
    }

    pub fn singleton(sym: DecompSymbol) -> Self {
        let mut s = SymbolSet::new();
        s.insert(sym);
        s
    }

    pub fn insert(&mut self, sym: DecompSymbol) -> bool {
        self.set.insert(sym)
    }

    pub fn contains(&self, sym: &DecompSymbol) -> bool {
        self.set.contains(sym)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &DecompSymbol> {
        self.set.iter()
    }

    pub fn union_with(&mut self, other: &SymbolSet) {
        for s in other.iter() {
            self.set.insert(s.clone());
        }
    }

    pub fn difference(&self, other: &SymbolSet) -> SymbolSet {
        self.set.difference(&other.set).cloned().collect()
    }

    pub fn retain(&mut self, f: impl FnMut(&DecompSymbol) -> bool) {
        let mut f = f;
        self.set = std::mem::take(&mut self.set)
            .into_iter()
            .filter(|s| f(s))
            .collect();
    }

    /// JSON array of symbol strings, canonically sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.set
                .iter()
                .map(|s| serde_json::Value::String(s.to_string()))
                .collect(),
        )
    }
}

impl FromIterator<DecompSymbol> for SymbolSet {
    fn from_iter<T: IntoIterator<Item = DecompSymbol>>(iter: T) -> Self {
        SymbolSet {
            set: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for SymbolSet {
    type Item = DecompSymbol;
    type IntoIter = std::collections::btree_set::IntoIter<DecompSymbol>;
    fn into_iter(self) -> Self::IntoIter {
        self.set.into_iter()
    }
}

impl<'a> IntoIterator for &'a SymbolSet {
    type Item = &'a DecompSymbol;
    type IntoIter = std::collections::btree_set::Iter<'a, DecompSymbol>;
    fn into_iter(self) -> Self::IntoIter {
        self.set.iter()
    }
}

impl fmt::Display for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.set.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Atoms of the normal-ordering engine: a product word over indecomposable
/// preprojectives/preinjectives and fused regular symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Proj(u32),
    Reg(SegreSymbol),
    Inj(u32),
}

impl Atom {
    pub fn dim_vector(&self) -> DimVector {
        match self {
            Atom::Proj(n) => DimVector::new(n + 1, *n),
            Atom::Inj(n) => DimVector::new(*n, n + 1),
            Atom::Reg(s) => {
                let w = s.weight();
                DimVector::new(w, w)
            }
        }
    }

    pub fn defect(&self) -> i64 {
        match self {
            Atom::Proj(_) => -1,
            Atom::Inj(_) => 1,
            Atom::Reg(_) => 0,
        }
    }
}

impl DecompSymbol {
    /// Factorization into atoms whose left-to-right product is exactly
    /// `{self}`: preprojectives ascending, the fused regular symbol, then
    /// preinjectives descending.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut word = Vec::new();
        for &n in self.proj.iter().rev() {
            word.push(Atom::Proj(n));
        }
        if !self.regular.is_empty() {
            word.push(Atom::Reg(self.regular.clone()));
        }
        for &n in &self.inj {
            word.push(Atom::Inj(n));
        }
        word
    }
}

/// Placed indecomposable: the tag distinguishes points of the same degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Indec {
    Proj(u32),
    Inj(u32),
    Reg { tag: u32, degree: u32, len: u32 },
}

impl Indec {
    pub fn dim_vector(&self) -> DimVector {
        match *self {
            Indec::Proj(n) => DimVector::new(n + 1, n),
            Indec::Inj(n) => DimVector::new(n, n + 1),
            Indec::Reg { degree, len, .. } => DimVector::new(len * degree, len * degree),
        }
    }
}

/// Hom-space dimension between placed indecomposables.
pub fn hom_dim(x: &Indec, y: &Indec) -> u64 {
    use Indec::*;
    match (*x, *y) {
        (Proj(n), Proj(m)) => {
            if n <= m {
                (m - n + 1) as u64
            } else {
                0
            }
        }
        (Inj(n), Inj(m)) => {
            if n >= m {
                (n - m + 1) as u64
            } else {
                0
            }
        }
        (Proj(n), Inj(m)) => (n + m) as u64,
        (Inj(_), Proj(_)) => 0,
        (Proj(_), Reg { degree, len, .. }) => (len * degree) as u64,
        (Reg { .. }, Proj(_)) => 0,
        (Reg { degree, len, .. }, Inj(_)) => (len * degree) as u64,
        (Inj(_), Reg { .. }) => 0,
        (Reg { tag: t1, degree: d1, len: l1 }, Reg { tag: t2, degree: d2, len: l2 }) => {
            if t1 == t2 {
                debug_assert_eq!(d1, d2, "a point tag determines its degree");
                (l1.min(l2) * d1) as u64
            } else {
                0
            }
        }
    }
}

/// Ext^1-space dimension between placed indecomposables.
pub fn ext_dim(x: &Indec, y: &Indec) -> u64 {
    use Indec::*;
    match (*x, *y) {
        (Proj(n), Proj(m)) => {
            if n > m + 1 {
                (n - m - 1) as u64
            } else {
                0
            }
        }
        (Inj(n), Inj(m)) => {
            if m > n + 1 {
                (m - n - 1) as u64
            } else {
                0
            }
        }
        (Inj(m), Proj(n)) => (m + n + 2) as u64,
        (Proj(_), Inj(_)) => 0,
        (Reg { degree, len, .. }, Proj(_)) => (len * degree) as u64,
        (Proj(_), Reg { .. }) => 0,
        (Inj(_), Reg { degree, len, .. }) => (len * degree) as u64,
        (Reg { .. }, Inj(_)) => 0,
        (Reg { tag: t1, degree: d1, len: l1 }, Reg { tag: t2, degree: d2, len: l2 }) => {
            if t1 == t2 {
                debug_assert_eq!(d1, d2);
                (l1.min(l2) * d1) as u64
            } else {
                0
            }
        }
    }
}

/// Number of points of degree `l` over F_q: q+1 for l = 1 (one point at
/// infinity), otherwise the count of monic irreducible polynomials,
/// (1/l) * sum_{d | l} mu(l/d) q^d.
pub fn count_points(q: u64, l: u32) -> u64 {
    assert!(l >= 1);
    if l == 1 {
        return q + 1;
    }
    let l = l as u64;
    let mut total: i128 = 0;
    for d in 1..=l {
        if l % d == 0 {
            total += i128::from(moebius(l / d)) * (q as i128).pow(d as u32);
        }
    }
    debug_assert!(total >= 0 && total % l as i128 == 0);
    (total / l as i128) as u64
}

fn moebius(n: u64) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of isomorphism classes in the decomposition class over F_q: for each
/// degree, distinct points are assigned to the entries, unordered within runs
/// of identical partitions.
pub fn class_size(sym: &DecompSymbol, q: u64) -> u128 {
    let mut total: u128 = 1;
    let entries = sym.regular().entries();
    let mut i = 0;
    while i < entries.len() {
        let d = entries[i].degree;
        let mut j = i;
        while j < entries.len() && entries[j].degree == d {
            j += 1;
        }
        let group = &entries[i..j];
        let n_points = count_points(q, d) as u128;
        let k = group.len() as u128;
        if k > n_points {
            return 0;
        }
        // injections / permutations of identical partitions
        let mut ways: u128 = 1;
        for t in 0..group.len() {
            ways *= n_points - t as u128;
        }
        let mut r = 0;
        while r < group.len() {
            let mut s = r;
            while s < group.len() && group[s].partition == group[r].partition {
                s += 1;
            }
            ways /= factorial((s - r) as u128);
            r = s;
        }
        let _ = k;
        total *= ways;
        i = j;
    }
    total
}

fn factorial(n: u128) -> u128 {
    (1..=n).product::<u128>().max(1)
}

/// All pure-regular symbols made of single-part entries with total weight n:
/// the symbolic form of the set of regular classes with pairwise distinct
/// tubes in dimension (n, n).
pub fn regular_full_set(n: u32) -> Vec<SegreSymbol> {
    // entry universe: ((a), d) with a*d <= n, ordered canonically descending
    let mut universe: Vec<(SegreEntry, u32)> = Vec::new();
    for d in 1..=n.max(1) {
        for a in 1..=n {
            if a * d <= n {
                let e = SegreEntry::new(Partition::new(vec![a]), d);
                let w = e.weight();
                universe.push((e, w));
            }
        }
    }
    universe.sort_by(|x, y| y.0.cmp(&x.0));
    let mut out = Vec::new();
    let mut cur: Vec<SegreEntry> = Vec::new();
    fn rec(
        universe: &[(SegreEntry, u32)],
        from: usize,
        rem: u32,
        cur: &mut Vec<SegreEntry>,
        out: &mut Vec<SegreSymbol>,
    ) {
        if rem == 0 {
            out.push(SegreSymbol::new(cur.clone()));
            return;
        }
        for i in from..universe.len() {
            let (e, w) = &universe[i];
            if *w <= rem {
                cur.push(e.clone());
                rec(universe, i, rem - w, cur, out);
                cur.pop();
            }
        }
    }
    rec(&universe, 0, n, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All Segre symbols (arbitrary partitions per entry) of total weight w.
pub fn segre_symbols_of_weight(w: u32) -> Vec<SegreSymbol> {
    let mut universe: Vec<(SegreEntry, u32)> = Vec::new();
    for d in 1..=w.max(1) {
        for v in 1..=w {
            if v * d <= w {
                for lambda in Partition::all_of(v) {
                    let e = SegreEntry::new(lambda, d);
                    universe.push((e, v * d));
                }
            }
        }
    }
    universe.sort_by(|x, y| y.0.cmp(&x.0));
    let mut out = Vec::new();
    let mut cur: Vec<SegreEntry> = Vec::new();
    fn rec(
        universe: &[(SegreEntry, u32)],
        from: usize,
        rem: u32,
        cur: &mut Vec<SegreEntry>,
        out: &mut Vec<SegreSymbol>,
    ) {
        if rem == 0 {
            out.push(SegreSymbol::new(cur.clone()));
            return;
        }
        for i in from..universe.len() {
            let (e, wt) = &universe[i];
            if *wt <= rem {
                cur.push(e.clone());
                rec(universe, i, rem - wt, cur, out);
                cur.pop();
            }
        }
    }
    rec(&universe, 0, w, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Every decomposition symbol with dimension vector exactly `d`.
pub fn symbols_with_dim(d: DimVector) -> Vec<DecompSymbol> {
    let mut out = Vec::new();
    // preprojective block (ap, bp): t = ap - bp summands, indices sum to bp
    for ap in 0..=d.a {
        for bp in 0..=d.b.min(ap) {
            let t = (ap - bp) as usize;
            if t == 0 && bp != 0 {
                continue;
            }
            let projs: Vec<Vec<u32>> = if t == 0 {
                vec![vec![]]
            } else {
                Partition::all_of_max_len(bp, t)
                    .into_iter()
                    .map(|p| p.padded(t).parts().to_vec())
                    .collect()
            };
            // preinjective block (ai, bi): s = bi - ai summands, indices sum to ai
            for bi in 0..=(d.b - bp) {
                for ai in 0..=(d.a - ap).min(bi) {
                    let s = (bi - ai) as usize;
                    if s == 0 && ai != 0 {
                        continue;
                    }
                    let ra = d.a - ap - ai;
                    let rb = d.b - bp - bi;
                    if ra != rb {
                        continue;
                    }
                    let injs: Vec<Vec<u32>> = if s == 0 {
                        vec![vec![]]
                    } else {
                        Partition::all_of_max_len(ai, s)
                            .into_iter()
                            .map(|p| p.padded(s).parts().to_vec())
                            .collect()
                    };
                    for sigma in segre_symbols_of_weight(ra) {
                        for pr in &projs {
                            for ij in &injs {
                                out.push(DecompSymbol::new(pr.clone(), sigma.clone(), ij.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Every decomposition symbol with dimension vector componentwise <= `cap`.
pub fn symbols_up_to(cap: DimVector) -> Vec<DecompSymbol> {
    let mut out = Vec::new();
    for a in 0..=cap.a {
        for b in 0..=cap.b {
            out.extend(symbols_with_dim(DimVector::new(a, b)));
        }
    }
    out
}
