//! Finitely generated permutation groups with a deterministic
//! Schreier–Sims stabilizer chain: exact order, membership, orbits,
//! transitivity, block systems, stabilizers, and element enumeration.

use num_bigint::BigUint;
use num_traits::One;
use once_cell::sync::OnceCell;
use std::collections::{HashMap, HashSet, VecDeque};

use super::perm::Permutation;
use super::GroupError;

/// One level of the stabilizer chain: a base point, the orbit of the base
/// under this level's group, coset representatives, and generators.
#[derive(Clone, Debug)]
struct ChainLevel {
    base: usize,
    orbit: Vec<usize>,
    transversal: HashMap<usize, Permutation>,
    #[allow(dead_code)]
    gens: Vec<Permutation>,
    stabilizer_gens: Vec<Permutation>,
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<ChainLevel>,
}

impl StabChain {
    /// Deterministic Schreier–Sims. Base points are chosen as the smallest
    /// moved point at each level unless a forced leading base is given.
    fn build(degree: usize, generators: &[Permutation], forced_first_base: Option<usize>) -> Self {
        let mut levels = Vec::new();
        let mut gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut first = forced_first_base;
        while !gens.is_empty() {
            let base = match first.take() {
                Some(b) => b,
                None => (0..degree)
                    .find(|&p| gens.iter().any(|g| g.apply(p) != p))
                    .expect("non-identity generators move some point"),
            };
            let (orbit, transversal) = orbit_with_transversal(degree, &gens, base);
            // Schreier generators generate the stabilizer of the base exactly.
            let mut seen: HashSet<Permutation> = HashSet::new();
            let mut stab_gens = Vec::new();
            for &p in &orbit {
                let up = &transversal[&p];
                for g in &gens {
                    let q = g.apply(p);
                    let schreier = up.then(g).then(&transversal[&q].inverse());
                    if !schreier.is_identity() && seen.insert(schreier.clone()) {
                        stab_gens.push(schreier);
                    }
                }
            }
            levels.push(ChainLevel {
                base,
                orbit,
                transversal,
                gens: gens.clone(),
                stabilizer_gens: stab_gens.clone(),
            });
            gens = stab_gens;
        }
        StabChain { levels }
    }

    fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for level in &self.levels {
            acc *= BigUint::from(level.orbit.len());
        }
        acc
    }

    fn contains(&self, perm: &Permutation) -> bool {
        let mut residue = perm.clone();
        for level in &self.levels {
            let image = residue.apply(level.base);
            match level.transversal.get(&image) {
                Some(rep) => residue = residue.then(&rep.inverse()),
                None => return false,
            }
        }
        residue.is_identity()
    }
}

fn orbit_with_transversal(
    degree: usize,
    gens: &[Permutation],
    base: usize,
) -> (Vec<usize>, HashMap<usize, Permutation>) {
    let mut orbit = vec![base];
    let mut transversal = HashMap::new();
    transversal.insert(base, Permutation::identity(degree));
    let mut queue = VecDeque::from([base]);
    while let Some(p) = queue.pop_front() {
        let up = transversal[&p].clone();
        for g in gens {
            let q = g.apply(p);
            if !transversal.contains_key(&q) {
                transversal.insert(q, up.then(g));
                orbit.push(q);
                queue.push_back(q);
            }
        }
    }
    (orbit, transversal)
}

/// Finitely generated permutation group. Immutable after construction; the
/// stabilizer chain is a write-once cache filled on first use.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceCell<StabChain>,
}

/// Monodromy pair: the group together with the stabilized germ index.
#[derive(Clone, Debug)]
pub struct MonodromyPair {
    pub group: PermutationGroup,
    pub stabilized_point: usize,
    pub stabilizer: PermutationGroup,
}

impl PermutationGroup {
    /// The trivial group is represented by an identity generator.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        assert!(degree >= 1);
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        PermutationGroup {
            degree,
            generators,
            chain: OnceCell::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::new(degree, vec![])
    }

    pub fn symmetric(degree: usize) -> Self {
        if degree == 1 {
            return PermutationGroup::trivial(1);
        }
        let transposition = Permutation::from_cycles(degree, &[vec![0, 1]]);
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()]);
        PermutationGroup::new(degree, vec![transposition, cycle])
    }

    pub fn cyclic(degree: usize) -> Self {
        PermutationGroup::new(degree, vec![Permutation::from_cycles(degree, &[(0..degree).collect()])])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, None))
    }

    /// Exact group order from the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        use num_traits::ToPrimitive;
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        assert_eq!(perm.degree(), self.degree);
        self.chain().contains(perm)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let (orbit, _) = orbit_with_transversal(self.degree, &self.generators, point);
        let mut o = orbit;
        o.sort_unstable();
        o
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// All elements, breadth-first, if the order does not exceed `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, GroupError> {
        if let Some(order) = self.order_u64() {
            if order as usize > cap {
                return Err(GroupError::OrderTooLarge { order: self.order() });
            }
        } else {
            return Err(GroupError::OrderTooLarge { order: self.order() });
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(self.degree);
        let mut queue = VecDeque::from([id.clone()]);
        seen.insert(id);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Stabilizer of a point via Schreier generators, requiring transitivity
    /// (the monodromy-pair use case).
    pub fn stabilizer(&self, point: usize) -> Result<PermutationGroup, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        assert!(point < self.degree);
        let chain = StabChain::build(self.degree, &self.generators, Some(point));
        let gens = chain.levels[0].stabilizer_gens.clone();
        Ok(PermutationGroup::new(self.degree, gens))
    }

    pub fn monodromy_pair(&self, point: usize) -> Result<MonodromyPair, GroupError> {
        let stabilizer = self.stabilizer(point)?;
        Ok(MonodromyPair {
            group: self.clone(),
            stabilized_point: point,
            stabilizer,
        })
    }

    /// The minimal block system whose block contains both seed points
    /// (Atkinson's algorithm). Returns the partition as sorted blocks.
    fn minimal_block_system(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        fn union(parent: &mut Vec<usize>, x: usize, y: usize) -> bool {
            let (rx, ry) = (find(parent, x), find(parent, y));
            if rx == ry {
                return false;
            }
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            parent[hi] = lo;
            true
        }
        union(&mut parent, a, b);
        let mut queue = VecDeque::from([(a, b)]);
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if union(&mut parent, gx, gy) {
                    queue.push_back((gx, gy));
                }
            }
        }
        let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
        for p in 0..n {
            let r = find(&mut parent, p);
            blocks.entry(r).or_default().push(p);
        }
        let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
        out.sort();
        out
    }

    /// Primitivity via minimal block systems from each pair {0, b}. When
    /// imprimitive, the witness is a nontrivial preserved partition.
    pub fn is_primitive(&self) -> Result<(bool, Option<Vec<Vec<usize>>>), GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        if self.degree == 1 {
            return Ok((true, None));
        }
        for b in 1..self.degree {
            let blocks = self.minimal_block_system(0, b);
            if blocks.len() > 1 && blocks.len() < self.degree {
                return Ok((false, Some(blocks)));
            }
        }
        Ok((true, None))
    }

    /// True iff some element is a single n-cycle. Fast paths: a full-cycle
    /// generator, or a caller-checked designated permutation; otherwise
    /// exhaustive enumeration up to the cap.
    pub fn contains_full_cycle(&self, cap: usize) -> Result<bool, GroupError> {
        if self.generators.iter().any(|g| g.is_full_cycle()) {
            return Ok(true);
        }
        let elements = self.elements(cap)?;
        Ok(elements.iter().any(|p| p.is_full_cycle()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(PermutationGroup::symmetric(5).order(), BigUint::from(120u32));
        assert_eq!(PermutationGroup::symmetric(4).order(), BigUint::from(24u32));
        assert_eq!(PermutationGroup::symmetric(8).order(), BigUint::from(40320u32));
    }

    #[test]
    fn trivial_and_cyclic_orders() {
        assert_eq!(PermutationGroup::trivial(4).order(), BigUint::from(1u32));
        assert_eq!(PermutationGroup::cyclic(6).order(), BigUint::from(6u32));
    }

    #[test]
    fn order_matches_enumeration_small_degrees() {
        // Brute-force oracle for a handful of generated groups of degree <= 7.
        let cases: Vec<PermutationGroup> = vec![
            PermutationGroup::symmetric(4),
            PermutationGroup::symmetric(5),
            PermutationGroup::cyclic(7),
            PermutationGroup::new(
                4,
                vec![Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])],
            ),
            PermutationGroup::new(
                6,
                vec![
                    Permutation::from_cycles(6, &[vec![0, 1, 2]]),
                    Permutation::from_cycles(6, &[vec![3, 4]]),
                ],
            ),
        ];
        for g in cases {
            let n = g.elements(100_000).unwrap().len();
            assert_eq!(g.order(), BigUint::from(n));
        }
    }

    #[test]
    fn membership() {
        let s4 = PermutationGroup::symmetric(4);
        assert!(s4.contains(&Permutation::from_cycles(4, &[vec![1, 3]])));
        let a4_gens = vec![
            Permutation::from_cycles(4, &[vec![0, 1, 2]]),
            Permutation::from_cycles(4, &[vec![1, 2, 3]]),
        ];
        let a4 = PermutationGroup::new(4, a4_gens);
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert!(!a4.contains(&Permutation::from_cycles(4, &[vec![0, 1]])));
    }

    #[test]
    fn transitivity_and_blocks() {
        let s4 = PermutationGroup::symmetric(4);
        assert!(s4.is_transitive());
        assert_eq!(s4.is_primitive().unwrap(), (true, None));

        let c4 = PermutationGroup::cyclic(4);
        assert!(c4.is_transitive());
        let (prim, witness) = c4.is_primitive().unwrap();
        assert!(!prim);
        assert_eq!(witness.unwrap(), vec![vec![0, 2], vec![1, 3]]);

        let g = PermutationGroup::new(3, vec![Permutation::from_cycles(3, &[vec![0, 1]])]);
        assert!(!g.is_transitive());
        assert!(matches!(g.is_primitive(), Err(GroupError::NotTransitive)));
    }

    #[test]
    fn stabilizer_orders() {
        let s3 = PermutationGroup::symmetric(3);
        assert_eq!(s3.stabilizer(0).unwrap().order(), BigUint::from(2u32));
        let c5 = PermutationGroup::cyclic(5);
        assert_eq!(c5.stabilizer(0).unwrap().order(), BigUint::from(1u32));
        let s5 = PermutationGroup::symmetric(5);
        assert_eq!(s5.stabilizer(0).unwrap().order(), BigUint::from(24u32));
        // Orbit-stabilizer at every point.
        for p in 0..5 {
            let stab = s5.stabilizer(p).unwrap();
            assert_eq!(stab.order() * BigUint::from(5u32), s5.order());
        }
    }

    #[test]
    fn full_cycle_search() {
        assert!(PermutationGroup::cyclic(7).contains_full_cycle(1_000_000).unwrap());
        assert!(PermutationGroup::symmetric(5).contains_full_cycle(1_000_000).unwrap());
        let g = PermutationGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])],
        );
        assert!(!g.contains_full_cycle(1_000_000).unwrap());
    }
}
