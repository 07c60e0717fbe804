//! Linear-independence audit of generator sets, over ℂ and over ℝ.

use num_complex::Complex64;
use serde::Serialize;

use crate::generators::GeneratorSet;
use crate::linalg::{self, complex_rank, real_rank};
use crate::tolerance::{EPSILON, RANK_RELATIVE};

#[derive(Debug, Clone, Serialize)]
pub struct SetRank {
    pub label: String,
    pub complex_rank: usize,
    pub real_rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CumulativeRank {
    /// Number of sets in the union (the first `count` of the input).
    pub count: usize,
    pub complex_rank: usize,
    pub real_rank: usize,
    /// Rank gained over the previous union.
    pub added_complex: usize,
    pub added_real: usize,
}

/// dim(span A ∩ span B) = rank A + rank B − rank(A ∪ B).
#[derive(Debug, Clone, Serialize)]
pub struct Intersection {
    pub first: String,
    pub second: String,
    pub complex_dim: usize,
    pub real_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SetOverlap {
    pub label: String,
    /// 1-based generators lying in the complex span of all earlier sets.
    pub in_span_of_previous: Vec<usize>,
    /// 1-based generators identical (within ε) to the same-index generator
    /// of the immediately preceding set.
    pub identical_to_previous: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyChecks {
    pub cumulative_monotone: bool,
    pub union_within_sum: bool,
    pub within_bounds: bool,
}

impl ConsistencyChecks {
    pub fn all(&self) -> bool {
        self.cumulative_monotone && self.union_within_sum && self.within_bounds
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub threshold_relative: f64,
    pub per_set: Vec<SetRank>,
    pub cumulative: Vec<CumulativeRank>,
    /// Each set against the union of all earlier sets.
    pub consecutive_intersections: Vec<Intersection>,
    pub pairwise_intersections: Vec<Intersection>,
    pub overlaps: Vec<SetOverlap>,
    pub consistency: ConsistencyChecks,
}

fn vectors(sets: &[&GeneratorSet]) -> Vec<Vec<Complex64>> {
    sets.iter()
        .flat_map(|s| s.matrices.iter().map(|m| m.flatten()))
        .collect()
}

fn ranks(sets: &[&GeneratorSet]) -> (usize, usize) {
    let v = vectors(sets);
    (
        complex_rank(&v, RANK_RELATIVE),
        real_rank(&v, RANK_RELATIVE),
    )
}

/// Ranks of each set, of the cumulative unions in the given order, and of
/// their intersections; generators of each set lying in the span of the
/// earlier ones.
pub fn rank_audit(sets: &[GeneratorSet]) -> RankReport {
    let refs: Vec<&GeneratorSet> = sets.iter().collect();
    let per_set: Vec<SetRank> = refs
        .iter()
        .map(|s| {
            let (complex_rank, real_rank) = ranks(&[s]);
            SetRank {
                label: s.label.clone(),
                complex_rank,
                real_rank,
            }
        })
        .collect();

    let mut cumulative: Vec<CumulativeRank> = Vec::new();
    let mut consecutive_intersections = Vec::new();
    let mut overlaps = Vec::new();
    for k in 0..refs.len() {
        let (complex_rank, real_rank) = ranks(&refs[..=k]);
        let (prev_c, prev_r) = cumulative
            .last()
            .map(|c| (c.complex_rank, c.real_rank))
            .unwrap_or((0, 0));
        if k > 0 {
            consecutive_intersections.push(Intersection {
                first: format!("union of first {k}"),
                second: refs[k].label.clone(),
                complex_dim: (prev_c + per_set[k].complex_rank).saturating_sub(complex_rank),
                real_dim: (prev_r + per_set[k].real_rank).saturating_sub(real_rank),
            });
        }
        let earlier = vectors(&refs[..k]);
        let in_span_of_previous = if k == 0 {
            Vec::new()
        } else {
            (1..=8)
                .filter(|&a| {
                    let mut v = earlier.clone();
                    v.push(refs[k].matrices[a - 1].flatten());
                    linalg::complex_rank(&v, RANK_RELATIVE) == prev_c
                })
                .collect()
        };
        let identical_to_previous = if k == 0 {
            Vec::new()
        } else {
            (1..=8)
                .filter(|&a| {
                    refs[k].matrices[a - 1].approx_eq(&refs[k - 1].matrices[a - 1], EPSILON)
                })
                .collect()
        };
        overlaps.push(SetOverlap {
            label: refs[k].label.clone(),
            in_span_of_previous,
            identical_to_previous,
        });
        cumulative.push(CumulativeRank {
            count: k + 1,
            complex_rank,
            real_rank,
            added_complex: complex_rank.saturating_sub(prev_c),
            added_real: real_rank.saturating_sub(prev_r),
        });
    }

    let mut pairwise_intersections = Vec::new();
    let mut union_within_sum = true;
    for a in 0..refs.len() {
        for b in a + 1..refs.len() {
            let (uc, ur) = ranks(&[refs[a], refs[b]]);
            let (sc, sr) = (
                per_set[a].complex_rank + per_set[b].complex_rank,
                per_set[a].real_rank + per_set[b].real_rank,
            );
            union_within_sum &= uc <= sc && ur <= sr;
            pairwise_intersections.push(Intersection {
                first: refs[a].label.clone(),
                second: refs[b].label.clone(),
                complex_dim: sc.saturating_sub(uc),
                real_dim: sr.saturating_sub(ur),
            });
        }
    }
    let mut prev = (0, 0);
    let mut cumulative_monotone = true;
    for c in &cumulative {
        cumulative_monotone &= c.complex_rank >= prev.0 && c.real_rank >= prev.1;
        prev = (c.complex_rank, c.real_rank);
    }
    let within_bounds = cumulative
        .iter()
        .all(|c| c.complex_rank <= 16 && c.real_rank <= 32 && c.complex_rank <= c.real_rank);

    RankReport {
        threshold_relative: RANK_RELATIVE,
        per_set,
        cumulative,
        consecutive_intersections,
        pairwise_intersections,
        overlaps,
        consistency: ConsistencyChecks {
            cumulative_monotone,
            union_within_sum,
            within_bounds,
        },
    }
}

/// An expected independence count for the four copies, next to the computed one.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimComparison {
    pub claim: String,
    pub stated: usize,
    pub computed_complex: usize,
    pub computed_real: usize,
    pub agrees: bool,
}

/// Compare an audit of copies #0..#3 (in that order) with the stated
/// counts: copy #1 adds 4, copy #2 adds 2, copy #3 adds 0, 16 in total.
/// `agrees` requires the complex and the real count to equal the stated one.
pub fn compare_with_stated_counts(report: &RankReport) -> Vec<ClaimComparison> {
    if report.cumulative.len() != 4 {
        return Vec::new();
    }
    let c = &report.cumulative;
    let claim = |text: &str, stated: usize, complex: usize, real: usize| ClaimComparison {
        claim: text.to_string(),
        stated,
        computed_complex: complex,
        computed_real: real,
        agrees: complex == stated && real == stated,
    };
    vec![
        claim(
            "copy #0 generators independent",
            8,
            c[0].complex_rank,
            c[0].real_rank,
        ),
        claim(
            "copy #1 adds independent matrices",
            4,
            c[1].added_complex,
            c[1].added_real,
        ),
        claim(
            "copy #2 adds independent matrices",
            2,
            c[2].added_complex,
            c[2].added_real,
        ),
        claim(
            "copy #3 adds independent matrices",
            0,
            c[3].added_complex,
            c[3].added_real,
        ),
        claim(
            "total independent matrices",
            16,
            c[3].complex_rank,
            c[3].real_rank,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        build_set, gellmann4_generator_set, BuildParams, CopyId, PseudoscalarSide,
    };

    fn copies() -> Vec<GeneratorSet> {
        CopyId::ALL
            .iter()
            .map(|&c| build_set(&BuildParams::new(c, PseudoscalarSide::RightInverse)))
            .collect()
    }

    #[test]
    fn single_gellmann_set_has_rank_eight() {
        let r = rank_audit(&[gellmann4_generator_set()]);
        assert_eq!(r.per_set[0].complex_rank, 8);
        assert_eq!(r.per_set[0].real_rank, 8);
    }

    #[test]
    fn four_copies() {
        let r = rank_audit(&copies());
        let complex: Vec<usize> = r.cumulative.iter().map(|c| c.complex_rank).collect();
        let real: Vec<usize> = r.cumulative.iter().map(|c| c.real_rank).collect();
        assert_eq!(complex, vec![8, 13, 15, 15]);
        assert_eq!(real, vec![8, 13, 15, 15]);
        assert!(r.consistency.all());
        assert_eq!(r.overlaps[1].identical_to_previous, vec![4, 5]);
        assert!(r.overlaps[1].in_span_of_previous.contains(&4));
        assert!(r.overlaps[1].in_span_of_previous.contains(&5));
        assert_eq!(
            r.overlaps[3].in_span_of_previous,
            (1..=8).collect::<Vec<_>>()
        );
        assert_eq!(r.consecutive_intersections[0].complex_dim, 3);
        let claims = compare_with_stated_counts(&r);
        let agreeing: Vec<&str> = claims
            .iter()
            .filter(|c| c.agrees)
            .map(|c| c.claim.as_str())
            .collect();
        assert_eq!(
            agreeing,
            vec![
                "copy #0 generators independent",
                "copy #2 adds independent matrices",
                "copy #3 adds independent matrices"
            ]
        );
    }

    #[test]
    fn empty_audit() {
        let r = rank_audit(&[]);
        assert!(r.cumulative.is_empty());
        assert!(r.consistency.all());
        assert!(compare_with_stated_counts(&r).is_empty());
    }
}
