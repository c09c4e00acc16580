//! Bounded breadth-first orbits and stabilizer scans.

use std::collections::HashSet;
use std::hash::Hash;

use crate::braid::{BraidWord, Letter};
use crate::collections::NumericalCollection;
use crate::{Error, Result};

use super::{apply_g, GLetter, SixTuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitMember<T> {
    pub depth: usize,
    pub element: T,
}

/// Members in discovery order: by depth, then by generator order of the
/// first parent that reached them.
#[derive(Debug, Clone)]
pub struct Orbit<T> {
    pub members: Vec<OrbitMember<T>>,
    pub depth: usize,
    pub cap: usize,
    /// False when exploration stopped at the cap.
    pub complete: bool,
}

impl<T> Orbit<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.members.iter().map(|m| &m.element)
    }

    fn into_result(self) -> Result<Self> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::CapExceeded { cap: self.cap })
        }
    }
}

/// Breadth-first closure of `seed` under `neighbors`, at most `depth` steps
/// and at most `cap` distinct members.
pub fn explore<T, F>(seed: T, depth: usize, cap: usize, mut neighbors: F) -> Orbit<T>
where
    T: Clone + Eq + Hash,
    F: FnMut(&T) -> Vec<T>,
{
    let mut seen: HashSet<T> = HashSet::new();
    seen.insert(seed.clone());
    let mut members = vec![OrbitMember {
        depth: 0,
        element: seed,
    }];
    let mut complete = cap >= 1;
    let mut frontier = 0..members.len();
    'levels: for d in 1..=depth {
        let start = members.len();
        for k in frontier.clone() {
            for next in neighbors(&members[k].element) {
                if seen.contains(&next) {
                    continue;
                }
                if members.len() >= cap {
                    complete = false;
                    break 'levels;
                }
                seen.insert(next.clone());
                members.push(OrbitMember {
                    depth: d,
                    element: next,
                });
            }
        }
        frontier = start..members.len();
        if frontier.is_empty() {
            break;
        }
    }
    Orbit {
        members,
        depth,
        cap,
        complete,
    }
}

/// The mutation letters `L_0 … L_{n−1}, R_0 … R_{n−1}` in canonical order.
pub fn mutation_letters(n: usize) -> Vec<Letter> {
    (0..n)
        .map(Letter::left)
        .chain((0..n).map(Letter::right))
        .collect()
}

pub fn explore_collections(
    seed: &NumericalCollection,
    depth: usize,
    cap: usize,
) -> Orbit<NumericalCollection> {
    let letters = mutation_letters(seed.n());
    explore(seed.clone(), depth, cap, |c| {
        letters
            .iter()
            .map(|&l| c.apply_letter(l).expect("letters are in range"))
            .collect()
    })
}

pub fn explore_tuples(seed: &SixTuple, depth: usize, cap: usize) -> Orbit<SixTuple> {
    explore(seed.clone(), depth, cap, |t| {
        GLetter::ALL.iter().map(|&g| apply_g(t, g)).collect()
    })
}

/// Collections reachable by at most `depth` mutations, deduplicated by
/// (gram, classes). Errors if more than `cap` members are found.
pub fn orbit_collections(
    seed: &NumericalCollection,
    depth: usize,
    cap: usize,
) -> Result<Orbit<NumericalCollection>> {
    explore_collections(seed, depth, cap).into_result()
}

/// Tuples reachable under `v, w2, w2⁻¹, w3` in at most `depth` steps.
pub fn orbit_tuples(seed: &SixTuple, depth: usize, cap: usize) -> Result<Orbit<SixTuple>> {
    explore_tuples(seed, depth, cap).into_result()
}

/// All freely reduced non-empty words of length ≤ `max_len` fixing `c`
/// exactly (gram and classes), sorted by length then letters. `cap` bounds
/// the number of words examined.
pub fn stabilizer_scan(
    c: &NumericalCollection,
    max_len: usize,
    cap: usize,
) -> Result<Vec<BraidWord>> {
    let letters = mutation_letters(c.n());
    let mut found = Vec::new();
    let mut examined = 0usize;
    // suffix[0] is the letter acting first; words are grown on the left.
    let mut suffix: Vec<Letter> = Vec::new();
    scan(
        c,
        c,
        &letters,
        max_len,
        cap,
        &mut suffix,
        &mut examined,
        &mut found,
    )?;
    let strands = c.size();
    let mut words: Vec<BraidWord> = found
        .into_iter()
        .map(|letters| BraidWord::new(strands, letters).expect("letters are in range"))
        .collect();
    words.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.letters().cmp(b.letters()))
    });
    Ok(words)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    target: &NumericalCollection,
    state: &NumericalCollection,
    letters: &[Letter],
    max_len: usize,
    cap: usize,
    word: &mut Vec<Letter>,
    examined: &mut usize,
    found: &mut Vec<Vec<Letter>>,
) -> Result<()> {
    if word.len() == max_len {
        return Ok(());
    }
    for &l in letters {
        if word.first() == Some(&l.inverse()) {
            continue;
        }
        *examined += 1;
        if *examined > cap {
            return Err(Error::CapExceeded { cap });
        }
        let next = state.apply_letter(l)?;
        word.insert(0, l);
        if next == *target {
            found.push(word.clone());
        }
        scan(target, &next, letters, max_len, cap, word, examined, found)?;
        word.remove(0);
    }
    Ok(())
}
