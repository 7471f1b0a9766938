//! Set partitions of `{1..k}`, ordered partitions, and the inclusion-exclusion
//! coefficients `a(P)` that express a configuration space through its
//! diagonals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{factorial, rat, Rational};
use crate::error::{check_range, Error, Result};
use crate::report::CheckReport;

pub const MAX_PARTITION_K: usize = 12;
pub const MAX_ORDERED_K: usize = 9;
pub const MAX_GRAPH_ORACLE_K: usize = 6;

/// Partition of `{1..k}` into nonempty blocks.
///
/// Blocks are sorted internally and ordered by their least element, so
/// derived equality is structural equality of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes a list of blocks over `{1..k}`.
    pub fn from_blocks(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = validate_blocks(k, blocks)?;
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { k, blocks })
    }

    /// Builds the partition encoded by a restricted growth string (0-based labels).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let nblocks = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { k: rgs.len(), blocks }
    }

    /// The partition into singletons.
    pub fn discrete(k: usize) -> Self {
        SetPartition {
            k,
            blocks: (1..=k).map(|i| vec![i]).collect(),
        }
    }

    /// The one-block partition.
    pub fn full(k: usize) -> Self {
        SetPartition {
            k,
            blocks: if k == 0 { Vec::new() } else { vec![(1..=k).collect()] },
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `|P|`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `x` (1-based element).
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        self.k == coarser.k
            && self.blocks.iter().all(|b| {
                let host = coarser.block_of(b[0]);
                host.is_some() && b.iter().all(|&x| coarser.block_of(x) == host)
            })
    }
}

fn validate_blocks(k: usize, mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; k + 1];
    for b in blocks.iter_mut() {
        if b.is_empty() {
            return Err(Error::Invalid("empty block".into()));
        }
        b.sort_unstable();
        for &x in b.iter() {
            if x == 0 || x > k {
                return Err(Error::Invalid(format!("element {x} outside 1..={k}")));
            }
            if seen[x] {
                return Err(Error::Invalid(format!("element {x} appears twice")));
            }
            seen[x] = true;
        }
    }
    if let Some(x) = (1..=k).find(|&x| !seen[x]) {
        return Err(Error::Invalid(format!("element {x} is not covered")));
    }
    Ok(blocks)
}

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Vec<usize>]) -> fmt::Result {
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            f.write_str("|")?;
        }
        for (j, x) in b.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

fn parse_blocks(s: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let blocks = s
        .trim()
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad element `{x}`")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let k = blocks.iter().map(Vec::len).sum();
    Ok((k, blocks))
}

/// `1,2|3` style text form.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (k, blocks) = parse_blocks(s)?;
        SetPartition::from_blocks(k, blocks)
    }
}

/// Sequence of nonempty disjoint blocks covering `{1..k}`; order matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn from_blocks(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = validate_blocks(k, blocks)?;
        Ok(OrderedPartition { k, blocks })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Forgets the order of the blocks.
    pub fn unordered(&self) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| b[0]);
        SetPartition { k: self.k, blocks }
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

impl FromStr for OrderedPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (k, blocks) = parse_blocks(s)?;
        OrderedPartition::from_blocks(k, blocks)
    }
}

/// Advances a restricted growth string in lexicographic order.
fn next_rgs(a: &mut [usize]) -> bool {
    let n = a.len();
    // prefix maxima: a[i] may grow up to 1 + max(a[..i])
    for i in (1..n).rev() {
        let bound = a[..i].iter().copied().max().unwrap_or(0) + 1;
        if a[i] < bound {
            a[i] += 1;
            for x in &mut a[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

fn rgs_partitions(k: usize) -> Vec<SetPartition> {
    if k == 0 {
        return vec![SetPartition { k: 0, blocks: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut a = vec![0usize; k];
    loop {
        out.push(SetPartition::from_rgs(&a));
        if !next_rgs(&mut a) {
            break;
        }
    }
    out
}

/// All partitions of `{1..k}` in restricted-growth-string order; there are `Bell(k)` of them.
pub fn enumerate_partitions(k: usize) -> Result<Vec<SetPartition>> {
    check_range("k", k, 1, MAX_PARTITION_K)?;
    Ok(rgs_partitions(k))
}

/// Lexicographic successor of a permutation, in place.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All ordered partitions of `{1..k}`: each set partition in RGS order
/// followed by the lexicographic permutations of its blocks.
pub fn enumerate_ordered_partitions(k: usize) -> Result<Vec<OrderedPartition>> {
    check_range("k", k, 1, MAX_ORDERED_K)?;
    let mut out = Vec::new();
    for p in rgs_partitions(k) {
        let mut perm: Vec<usize> = (0..p.len()).collect();
        loop {
            out.push(OrderedPartition {
                k,
                blocks: perm.iter().map(|&i| p.blocks[i].clone()).collect(),
            });
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    Ok(out)
}

/// `a(P) = Π (-1)^{|B|-1} (|B|-1)!` over the blocks `B` of `P`.
pub fn coefficient_a(p: &SetPartition) -> Rational {
    p.blocks
        .iter()
        .map(|b| {
            let s = b.len();
            let f = factorial(s - 1);
            if s % 2 == 0 {
                -f
            } else {
                f
            }
        })
        .fold(rat(1), |acc, x| acc * x)
}

/// Signed count `Σ (-1)^{|E(G)|}` over all graphs on `{1..k}` whose
/// connected components are exactly the blocks of `P`.
///
/// Enumerates all `2^{C(k,2)}` edge sets, so `k` is capped at 6.
pub fn coefficient_a_graph_oracle(p: &SetPartition) -> Result<Rational> {
    let k = p.k;
    check_range("k", k, 1, MAX_GRAPH_ORACLE_K)?;
    let edges: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let target: Vec<usize> = (1..=k).map(|x| p.block_of(x).expect("covering")).collect();
    let mut total: i64 = 0;
    for mask in 0u32..(1u32 << edges.len()) {
        // edges must stay inside blocks, otherwise components merge blocks
        if edges
            .iter()
            .enumerate()
            .any(|(e, &(i, j))| mask & (1 << e) != 0 && target[i] != target[j])
        {
            continue;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let n = parent[c];
                parent[c] = r;
                c = n;
            }
            r
        }
        for (e, &(i, j)) in edges.iter().enumerate() {
            if mask & (1 << e) != 0 {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
        let mut components = std::collections::HashSet::new();
        for x in 0..k {
            components.insert(find(&mut parent, x));
        }
        if components.len() == p.len() {
            total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(rat(total))
}

/// Signed count of connected graphs on `k` labelled vertices, via
/// `b_k = -Σ_{i=1}^{k-1} C(k-2, i-1) b_i b_{k-i}`, `b_1 = 1`.
///
/// Term `i` counts graphs where the edge `{1,2}` is a bridge and the side
/// containing vertex 1 has `i` vertices; its other `i-1` vertices are chosen
/// among the `k-2` vertices other than 1 and 2.
pub fn connected_sum_b(k: usize) -> Result<Rational> {
    check_range("k", k, 1, 64)?;
    let mut b: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    for n in 2..=k {
        let mut s = BigInt::from(0);
        for i in 1..n {
            s += binomial(n - 2, i - 1) * &b[i] * &b[n - i];
        }
        b.push(-s);
    }
    Ok(Rational::from_integer(b[k].clone()))
}

fn binomial(n: usize, r: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All partitions whose blocks each lie inside a block of `coarse`.
pub fn enumerate_refinements(coarse: &SetPartition) -> Result<Vec<SetPartition>> {
    check_range("k", coarse.k, 1, MAX_PARTITION_K)?;
    // per block: every partition of that block, relabelled onto its elements
    let per_block: Vec<Vec<Vec<Vec<usize>>>> = coarse
        .blocks
        .iter()
        .map(|block| {
            rgs_partitions(block.len())
                .into_iter()
                .map(|q| {
                    q.blocks
                        .iter()
                        .map(|b| b.iter().map(|&i| block[i - 1]).collect())
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_block.len()];
    loop {
        let blocks: Vec<Vec<usize>> = idx
            .iter()
            .enumerate()
            .flat_map(|(b, &i)| per_block[b][i].iter().cloned())
            .collect();
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b[0]);
        out.push(SetPartition { k: coarse.k, blocks });
        // odometer, last block fastest
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < per_block[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Closed form of `a(P)` against the graph sum, for every partition of `{1..k}`.
pub fn check_a_oracle(k: usize) -> Result<CheckReport> {
    check_range("k", k, 1, MAX_GRAPH_ORACLE_K)?;
    let mut report = CheckReport::new("a-oracle");
    for p in enumerate_partitions(k)? {
        let closed = coefficient_a(&p);
        let oracle = coefficient_a_graph_oracle(&p)?;
        if closed == oracle {
            report.record(p.to_string(), true);
        } else {
            report.record_with(p.to_string(), false, format!("{closed} vs {oracle}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        let three = enumerate_partitions(3).unwrap();
        let text: Vec<String> = three.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["1,2,3", "1,2|3", "1,3|2", "1|2,3", "1|2|3"]);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(enumerate_partitions(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_partitions(13), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_ordered_partitions(10), Err(Error::OutOfRange { .. })));
        assert!(matches!(coefficient_a_graph_oracle(&SetPartition::full(7)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn ordered_partitions_of_two() {
        let y2: Vec<String> = enumerate_ordered_partitions(2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(y2, ["1,2", "1|2", "2|1"]);
    }

    #[test]
    fn coefficients() {
        assert_eq!(coefficient_a(&p("1|2|3")), rat(1));
        assert_eq!(coefficient_a(&p("1,2|3")), rat(-1));
        assert_eq!(coefficient_a(&p("1,2,3")), rat(2));
        assert_eq!(coefficient_a_graph_oracle(&p("1|2")).unwrap(), rat(1));
        assert_eq!(coefficient_a_graph_oracle(&p("1,2")).unwrap(), rat(-1));
        assert_eq!(coefficient_a_graph_oracle(&p("1,2,3")).unwrap(), rat(2));
    }

    #[test]
    fn connected_sums() {
        assert_eq!(connected_sum_b(1).unwrap(), rat(1));
        assert_eq!(connected_sum_b(2).unwrap(), rat(-1));
        assert_eq!(connected_sum_b(3).unwrap(), rat(2));
        // -(b1 b3 + 2 b2 b2 + b3 b1)
        assert_eq!(connected_sum_b(4).unwrap(), rat(-6));
    }

    #[test]
    fn refinements() {
        assert_eq!(enumerate_refinements(&p("1|2|3")).unwrap(), vec![p("1|2|3")]);
        assert_eq!(enumerate_refinements(&p("1,2,3")).unwrap().len(), 5);
        assert_eq!(enumerate_refinements(&p("1,2|3")).unwrap(), vec![p("1,2|3"), p("1|2|3")]);
    }

    #[test]
    fn parse_rejects_invalid() {
        assert!("1,2|2".parse::<SetPartition>().is_err());
        assert!("1,3".parse::<SetPartition>().is_err());
        assert!("1,a".parse::<SetPartition>().is_err());
        assert_eq!(p("3|2,1").to_string(), "1,2|3");
        let o: OrderedPartition = "3|2,1".parse().unwrap();
        assert_eq!(o.to_string(), "3|1,2");
        assert_eq!(o.unordered(), p("1,2|3"));
    }

    #[test]
    fn refines_relation() {
        assert!(p("1|2|3").refines(&p("1,2|3")));
        assert!(!p("1,3|2").refines(&p("1,2|3")));
    }
}
