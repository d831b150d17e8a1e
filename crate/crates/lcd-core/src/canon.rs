//! Canonical forms and automorphism groups via colored-graph labeling.
//!
//! A code maps to a graph whose automorphisms correspond exactly to the
//! monomial maps fixing the code. Over GF(2) this is the bipartite incidence
//! graph between nonzero codewords and coordinates, codeword vertices colored
//! by weight; a codeword equals its support, so any coordinate permutation
//! fixing the codeword set extends uniquely to a graph automorphism and vice
//! versa. Over GF(3) each coordinate becomes a pair of value vertices joined
//! by a 2-cycle of arcs, and every nonzero codeword sends one arc into the
//! value vertex it hits at each coordinate; swapping a pair is negating that
//! coordinate, so graph automorphisms are exactly the monomial automorphisms
//! (the all-negation map is always one, which is why ternary orders are even).
//!
//! Labeling is individualization with equitable refinement. The canonical form
//! is the minimum, over explored leaves of the search tree, of the pair
//! (invariant sequence, relabeled adjacency). Subtrees whose invariant prefix
//! already exceeds the current minimum are cut, unless they still track the
//! first leaf, which must stay reachable for automorphism discovery. Sibling
//! branches equivalent under discovered automorphisms are skipped, and the
//! group order falls out of the first root-to-leaf path by orbit-stabilizer.

use crate::code::LinearCode;
use crate::error::{resource, Result};
use crate::field::Field;
use crate::mass;
use num_bigint::BigUint;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

const KEY_VERSION: u8 = 1;

/// Largest graph the canonizer will attempt.
const VERTEX_LIMIT: usize = 1 << 13;

/// Search-tree budget; hitting it means the instance is far outside the
/// supported parameter range.
const NODE_LIMIT: u64 = 50_000_000;

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

fn fnv_u64(mut h: u64, x: u64) -> u64 {
    for b in x.to_le_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// A vertex-colored graph, directed or not, with bitset adjacency.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    vertex_count: usize,
    words: usize,
    directed: bool,
    colors: Vec<u32>,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl ColoredGraph {
    pub fn new(colors: Vec<u32>, directed: bool) -> Result<Self> {
        let n = colors.len();
        if n > VERTEX_LIMIT {
            return Err(resource(format!("graph with {n} vertices exceeds limit {VERTEX_LIMIT}")));
        }
        let words = n.div_ceil(64).max(1);
        Ok(ColoredGraph {
            vertex_count: n,
            words,
            directed,
            colors,
            out: vec![0; n * words],
            inn: vec![0; n * words],
        })
    }

    /// Adds the arc u→v, or the edge {u,v} when the graph is undirected.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_arc(u, v);
        if !self.directed {
            self.set_arc(v, u);
        }
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.inn[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    fn out_row(&self, v: usize) -> &[u64] {
        &self.out[v * self.words..(v + 1) * self.words]
    }

    fn in_row(&self, v: usize) -> &[u64] {
        &self.inn[v * self.words..(v + 1) * self.words]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    /// Color histogram as (color, count) pairs, ascending by color.
    pub fn color_spec(&self) -> Vec<(u32, u32)> {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &c in &self.colors {
            *counts.entry(c).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Canonical labeling plus the automorphism group it falls out of.
    pub fn canonize(&self) -> Result<(CanonicalForm, AutInfo)> {
        let n = self.vertex_count;
        if n == 0 {
            let form = CanonicalForm { labeling: Vec::new(), adjacency: Vec::new() };
            return Ok((form, AutInfo { order: BigUint::one(), generators: Vec::new() }));
        }
        let mut partition = Partition::initial(&self.colors);
        let seeds = partition.cell_starts();
        let mut search = Search {
            g: self,
            first: None,
            best: None,
            first_path: Vec::new(),
            path: Vec::new(),
            gens: Vec::new(),
            nodes: 0,
            mask: vec![0; self.words],
            sig: vec![0; n],
        };
        let root_inv = search.refine(&mut partition, &seeds);
        let mut invseq = vec![root_inv];
        search.node(&partition, &mut invseq, true, Ordering::Equal)?;
        let order = search.aut_order();
        let best = search.best.take().expect("search always reaches a leaf");
        let form = CanonicalForm { labeling: best.lab, adjacency: best.adj };
        Ok((form, AutInfo { order, generators: search.gens }))
    }
}

/// Result of canonization: `labeling[i]` is the original vertex placed at
/// canonical position i, and `adjacency` is the relabeled out-adjacency.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub labeling: Vec<usize>,
    pub adjacency: Vec<u64>,
}

/// Automorphism group of a colored graph, as found during canonization.
#[derive(Clone, Debug)]
pub struct AutInfo {
    pub order: BigUint,
    pub generators: Vec<Vec<usize>>,
}

/// Ordered partition of 0..n into contiguous cells of `elems`.
#[derive(Clone)]
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    start: Vec<usize>,
    len: Vec<usize>,
    cell_count: usize,
}

impl Partition {
    fn initial(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut elems: Vec<usize> = (0..n).collect();
        elems.sort_by_key(|&v| colors[v]);
        let mut p = Partition {
            elems,
            pos: vec![0; n],
            start: vec![0; n],
            len: vec![0; n],
            cell_count: 0,
        };
        let mut s = 0;
        while s < n {
            let c = colors[p.elems[s]];
            let mut e = s + 1;
            while e < n && colors[p.elems[e]] == c {
                e += 1;
            }
            p.len[s] = e - s;
            for t in s..e {
                p.pos[p.elems[t]] = t;
                p.start[p.elems[t]] = s;
            }
            p.cell_count += 1;
            s = e;
        }
        p
    }

    fn size(&self) -> usize {
        self.elems.len()
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.cell_count);
        let mut s = 0;
        while s < self.size() {
            starts.push(s);
            s += self.len[s];
        }
        starts
    }

    /// Smallest non-singleton cell, first one on ties.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut s = 0;
        while s < self.size() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|b| l < self.len[b]) {
                best = Some(s);
            }
            s += l;
        }
        best
    }

    /// Cuts v out of its cell into a leading singleton. Returns the two
    /// fragment starts.
    fn individualize(&mut self, v: usize) -> (usize, usize) {
        let s = self.start[v];
        let l = self.len[s];
        debug_assert!(l > 1);
        let u = self.elems[s];
        let pv = self.pos[v];
        self.elems.swap(s, pv);
        self.pos[u] = pv;
        self.pos[v] = s;
        self.len[s] = 1;
        let rest = s + 1;
        self.len[rest] = l - 1;
        for t in rest..s + l {
            self.start[self.elems[t]] = rest;
        }
        self.cell_count += 1;
        (s, rest)
    }

    /// Splits the cell at `s` into fragments grouped by `sig`, ascending.
    /// Returns the fragment starts.
    fn split_by(&mut self, s: usize, sig: &[u64]) -> Vec<usize> {
        let l = self.len[s];
        let mut members = self.elems[s..s + l].to_vec();
        members.sort_by_key(|&v| sig[v]);
        let mut frags = Vec::new();
        let mut i = 0;
        while i < l {
            let key = sig[members[i]];
            let mut j = i + 1;
            while j < l && sig[members[j]] == key {
                j += 1;
            }
            let fs = s + i;
            frags.push(fs);
            self.len[fs] = j - i;
            for (t, &v) in members.iter().enumerate().take(j).skip(i) {
                self.elems[s + t] = v;
                self.pos[v] = s + t;
                self.start[v] = fs;
            }
            i = j;
        }
        self.cell_count += frags.len() - 1;
        frags
    }
}

/// Leaf of the search tree: a discrete partition read as a labeling.
#[derive(Clone)]
struct Leaf {
    invseq: Vec<u64>,
    lab: Vec<usize>,
    adj: Vec<u64>,
}

struct Search<'g> {
    g: &'g ColoredGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    path: Vec<usize>,
    gens: Vec<Vec<usize>>,
    nodes: u64,
    mask: Vec<u64>,
    sig: Vec<u64>,
}

impl<'g> Search<'g> {
    /// Equitable refinement against the seed cells; returns the node
    /// invariant, a hash of the resulting positional cell sizes.
    fn refine(&mut self, p: &mut Partition, seeds: &[usize]) -> u64 {
        let n = p.size();
        let mut queue: VecDeque<usize> = VecDeque::with_capacity(n);
        let mut queued = vec![false; n];
        for &s in seeds {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            if p.cell_count == n {
                break;
            }
            let r_end = s + p.len[s];
            for &v in &p.elems[s..r_end] {
                self.mask[v >> 6] |= 1 << (v & 63);
            }
            for v in 0..n {
                let o = popcount_and(self.g.out_row(v), &self.mask);
                let i = if self.g.directed {
                    popcount_and(self.g.in_row(v), &self.mask)
                } else {
                    o
                };
                self.sig[v] = o << 32 | i;
            }
            for w in self.mask.iter_mut() {
                *w = 0;
            }
            let mut cs = 0;
            while cs < n {
                let l = p.len[cs];
                if l > 1 {
                    let key = self.sig[p.elems[cs]];
                    if p.elems[cs + 1..cs + l].iter().any(|&v| self.sig[v] != key) {
                        for f in p.split_by(cs, &self.sig) {
                            if !queued[f] {
                                queued[f] = true;
                                queue.push_back(f);
                            }
                        }
                    }
                }
                cs += p.len[cs];
            }
        }
        let mut h = fnv_u64(FNV_OFFSET, p.cell_count as u64);
        let mut s = 0;
        while s < n {
            h = fnv_u64(h, p.len[s] as u64);
            s += p.len[s];
        }
        h
    }

    /// One search-tree node; the partition arrives refined and its invariant
    /// already pushed. `eq_first` and `ord_best` carry the prefix comparison
    /// of `invseq` against the first and best leaves; only the best-side
    /// state may prune, and only off the first leaf's path.
    fn node(
        &mut self,
        p: &Partition,
        invseq: &mut Vec<u64>,
        eq_first: bool,
        ord_best: Ordering,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(resource(format!("canonical search exceeded {NODE_LIMIT} nodes")));
        }
        if !eq_first && ord_best == Ordering::Greater {
            return Ok(());
        }
        let Some(target) = p.target_cell() else {
            self.leaf(p, invseq);
            return Ok(());
        };
        let candidates = p.elems[target..target + p.len[target]].to_vec();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<Dsu> = None;
        let mut orbits_gens = 0;
        for &v in &candidates {
            if !explored.is_empty() {
                if orbits.is_none() || orbits_gens != self.gens.len() {
                    orbits = Some(self.orbits_fixing_path());
                    orbits_gens = self.gens.len();
                }
                let dsu = orbits.as_mut().expect("just built");
                let rv = dsu.find(v);
                if explored.iter().any(|&u| dsu.find(u) == rv) {
                    continue;
                }
            }
            let mut child = p.clone();
            let (a, b) = child.individualize(v);
            let h = self.refine(&mut child, &[a, b]);
            let i = invseq.len();
            invseq.push(h);
            let c_eq_first = eq_first
                && self.first.as_ref().is_none_or(|f| i < f.invseq.len() && f.invseq[i] == h);
            let c_ord = match ord_best {
                Ordering::Equal => match &self.best {
                    None => Ordering::Equal,
                    Some(b) if i >= b.invseq.len() => Ordering::Greater,
                    Some(b) => h.cmp(&b.invseq[i]),
                },
                settled => settled,
            };
            if self.first.is_none() {
                self.first_path.push(v);
            }
            self.path.push(v);
            let r = self.node(&child, invseq, c_eq_first, c_ord);
            self.path.pop();
            invseq.pop();
            r?;
            explored.push(v);
        }
        Ok(())
    }

    fn leaf(&mut self, p: &Partition, invseq: &[u64]) {
        let lab = p.elems.clone();
        let adj = self.relabel(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { invseq: invseq.to_vec(), lab, adj };
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return;
        };
        if invseq == &first.invseq[..] && adj == first.adj {
            self.gens.push(perm_between(&first.lab, &lab));
            return;
        }
        let best = self.best.as_ref().expect("set with first");
        match invseq.cmp(&best.invseq[..]).then_with(|| adj.cmp(&best.adj)) {
            Ordering::Less => {
                self.best = Some(Leaf { invseq: invseq.to_vec(), lab, adj });
            }
            Ordering::Equal => {
                self.gens.push(perm_between(&best.lab, &lab));
            }
            Ordering::Greater => {}
        }
    }

    /// Out-adjacency of the graph relabeled so position i holds `lab[i]`.
    fn relabel(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.g.vertex_count;
        let words = self.g.words;
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            let row = self.g.out_row(lab[i]);
            let dst = &mut adj[i * words..(i + 1) * words];
            for (j, &v) in lab.iter().enumerate() {
                if row[v >> 6] >> (v & 63) & 1 == 1 {
                    dst[j >> 6] |= 1 << (j & 63);
                }
            }
        }
        adj
    }

    /// Orbits under the generators that fix the current path pointwise.
    fn orbits_fixing_path(&self) -> Dsu {
        let mut dsu = Dsu::new(self.g.vertex_count);
        for gen in &self.gens {
            if self.path.iter().all(|&u| gen[u] == u) {
                for (v, &image) in gen.iter().enumerate() {
                    dsu.union(v, image);
                }
            }
        }
        dsu
    }

    /// |Aut| by orbit-stabilizer along the first root-to-leaf path: at each
    /// depth d, the discovered generators fixing the earlier path vertices
    /// connect first_path[d] to exactly its orbit under the stabilizer.
    fn aut_order(&self) -> BigUint {
        let n = self.g.vertex_count;
        let mut order = BigUint::one();
        for d in 0..self.first_path.len() {
            let mut dsu = Dsu::new(n);
            for gen in &self.gens {
                if self.first_path[..d].iter().all(|&u| gen[u] == u) {
                    for (v, &image) in gen.iter().enumerate() {
                        dsu.union(v, image);
                    }
                }
            }
            let root = dsu.find(self.first_path[d]);
            let size = (0..n).filter(|&v| dsu.find(v) == root).count();
            order *= BigUint::from(size);
        }
        order
    }
}

fn popcount_and(row: &[u64], mask: &[u64]) -> u64 {
    row.iter().zip(mask).map(|(a, b)| u64::from((a & b).count_ones())).sum()
}

/// The permutation sending a-labels to b-labels positionwise.
fn perm_between(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut sigma = vec![0; a.len()];
    for (x, y) in a.iter().zip(b) {
        sigma[*x] = *y;
    }
    sigma
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Graph encoding of a code; automorphisms correspond 1:1 to the monomial
/// maps fixing the code.
pub fn build_graph(code: &LinearCode) -> Result<ColoredGraph> {
    let n = code.len();
    let mut words = Vec::new();
    code.for_each_codeword(|w| {
        if !w.is_zero() {
            words.push(*w);
        }
    })?;
    match code.field() {
        Field::Gf2 => {
            let mut colors = vec![0u32; n];
            colors.extend(words.iter().map(|w| 1 + w.weight() as u32));
            let mut g = ColoredGraph::new(colors, false)?;
            for (t, w) in words.iter().enumerate() {
                let mut m = w.support_mask();
                while m != 0 {
                    let j = m.trailing_zeros() as usize;
                    m &= m - 1;
                    g.add_edge(n + t, j);
                }
            }
            Ok(g)
        }
        Field::Gf3 => {
            // Value vertices 2j and 2j+1 carry the entries 1 and 2 at
            // coordinate j; codeword vertices follow.
            let mut colors = vec![0u32; 2 * n];
            colors.extend(words.iter().map(|w| 1 + w.weight() as u32));
            let mut g = ColoredGraph::new(colors, true)?;
            for j in 0..n {
                g.add_edge(2 * j, 2 * j + 1);
                g.add_edge(2 * j + 1, 2 * j);
            }
            for (t, w) in words.iter().enumerate() {
                for j in 0..n {
                    let d = w.get(j);
                    if d != 0 {
                        g.add_edge(2 * n + t, 2 * j + usize::from(d) - 1);
                    }
                }
            }
            Ok(g)
        }
    }
}

/// Equivalence-class key: a header plus the canonical form of the derived
/// graph. Keys of two codes are equal exactly when the codes are monomially
/// equivalent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn assemble_key(
    field: Field,
    n: usize,
    k: usize,
    route: u8,
    graph: Option<(&ColoredGraph, &CanonicalForm)>,
) -> CanonicalKey {
    let mut bytes = vec![KEY_VERSION, field.order() as u8, n as u8, k as u8, route];
    if let Some((g, form)) = graph {
        for (color, count) in g.color_spec() {
            bytes.extend(color.to_le_bytes());
            bytes.extend(count.to_le_bytes());
        }
        for w in &form.adjacency {
            bytes.extend(w.to_le_bytes());
        }
    }
    CanonicalKey(bytes)
}

/// Canonical key and automorphism group order in one canonization.
///
/// Codes with k > n/2 are routed through the dual: monomial maps preserve the
/// inner product (both units of GF(3) square to 1), so C ≅ C' iff C⊥ ≅ C'⊥
/// and |Aut(C)| = |Aut(C⊥)|. The route is determined by (n, k) alone and is
/// recorded in the key header.
pub fn key_and_aut(code: &LinearCode) -> Result<(CanonicalKey, BigUint)> {
    let (field, n, k) = (code.field(), code.len(), code.dim());
    if k == 0 || k == n {
        let key = assemble_key(field, n, k, 0, None);
        return Ok((key, mass::monomial_group_order(field, n)));
    }
    let (side, route) = if 2 * k > n { (code.dual(), 1) } else { (code.clone(), 0) };
    let g = build_graph(&side)?;
    let (form, aut) = g.canonize()?;
    Ok((assemble_key(field, n, k, route, Some((&g, &form))), aut.order))
}

pub fn canonical_key(code: &LinearCode) -> Result<CanonicalKey> {
    Ok(key_and_aut(code)?.0)
}

/// Order of the group of monomial transformations fixing the code.
pub fn automorphism_order(code: &LinearCode) -> Result<BigUint> {
    Ok(key_and_aut(code)?.1)
}

/// Monomial equivalence, decided by canonical keys after cheap rejects.
pub fn are_equivalent(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.field() != b.field() || a.len() != b.len() || a.dim() != b.dim() {
        return Ok(false);
    }
    if let (Ok(wa), Ok(wb)) = (a.weight_enumerator(), b.weight_enumerator()) {
        if wa != wb {
            return Ok(false);
        }
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}
