//! Permutations of {0, …, n-1} with cycle-notation text used in reports.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of point i; must be a bijection.
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            assert!(img < n && !seen[img], "not a bijection of 0..{n}");
            seen[img] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in cycle.windows(2) {
                images[w[0]] = w[1];
            }
            if cycle.len() > 1 {
                images[*cycle.last().unwrap()] = cycle[0];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// self then other: (other ∘ self)(i) = other(self(i)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// other⁻¹ · self · other.
    pub fn conjugated_by(&self, other: &Permutation) -> Permutation {
        other.inverse().then(self).then(other)
    }

    /// self⁻¹ other⁻¹ self other.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        lens
    }

    /// Order of the permutation as an element.
    pub fn element_order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    /// True iff the permutation is a single cycle moving every point.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.degree();
        n >= 1 && self.cycles().first().map_or(n == 1, |c| c.len() == n)
    }

    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    /// Parses cycle notation such as "(0 1 2)(3 4)" at the given degree.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation, String> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(format!("expected '(' at: {rest}"));
            }
            let close = rest.find(')').ok_or("unbalanced parentheses")?;
            let inner = &rest[1..close];
            let cycle: Result<Vec<usize>, _> = inner
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| e.to_string()))
                .collect();
            let cycle = cycle?;
            if cycle.iter().any(|&p| p >= n) {
                return Err(format!("point out of range in cycle ({inner})"));
            }
            cycles.push(cycle);
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation::from_cycles(n, &cycles))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}
