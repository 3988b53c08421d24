//! The acceptance suite: one runner per criterion, shared by the
//! `acceptance` test target and the `selfcheck` CLI command. Each runner
//! returns a pass/fail report with a one-line detail.

pub mod treeoracle;

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::automata::{complement, is_empty, Acceptance, Alphabet, OmegaAutomaton};
use crate::bourgain::{analyze, m_rank, sep_family, FunctionAnalysis, SidedType};
use crate::funcatalog::{function_catalog, CatalogFunction};
use crate::games::{brute_force_solve, solve_parity, MealyStrategy};
use crate::rational::Rat;
use crate::realfun::{critical_pairs, ThresholdPair};
use crate::sampling;
use crate::wadge::catalog::{at_most_ones, delta_jr, pi_complete, sigma_complete};
use crate::wadge::{
    certify_witness, decompose, leq_w, m_leq, pass_encode, separate_closed, side_leq, GameMode,
    IndexedFamily, SetOrPair, SideSpec,
};

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} - {}",
            self.id,
            if self.passed { "pass" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub level_cap: usize,
    pub replay_samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            level_cap: crate::wadge::DEFAULT_LEVEL_CAP,
            replay_samples: 1000,
        }
    }
}

/// Run every criterion; reports come back ordered by id.
pub fn run_all(cfg: &Config) -> Vec<CriterionReport> {
    let mut reports = Vec::new();
    reports.push(criterion_1_solver_oracle(cfg));

    let (r2, pos2) = criterion_2_catalog_order();
    reports.push(r2);

    let data = CatalogData::build();
    let (r4, pos4) = criterion_4_pipeline_agreement(&data);
    let (r7, pos7) = criterion_7_separation_rank(&data, cfg);

    reports.push(criterion_3_certification(cfg, &data, &pos2, &pos4, &pos7));
    reports.push(r4);
    reports.push(criterion_5_structure(&data));
    reports.push(criterion_6_ladder(&data));
    reports.push(r7);
    reports.push(criterion_8_derivative_oracle());
    reports.push(criterion_9_pass_encoding());
    reports.push(criterion_10_interleave());
    reports.push(criterion_11_separators());

    reports.sort_by_key(|r| r.id);
    reports
}

fn report(id: usize, name: &'static str, passed: bool, detail: String) -> CriterionReport {
    CriterionReport {
        id,
        name,
        passed,
        detail,
    }
}

// ---------------------------------------------------------------- criterion 1

pub fn criterion_1_solver_oracle(cfg: &Config) -> CriterionReport {
    let mut rng = sampling::rng(cfg.seed);
    let arenas: Vec<_> = (0..500)
        .map(|_| sampling::random_arena(&mut rng, 8, 3))
        .collect();
    let disagreements: usize = arenas
        .par_iter()
        .map(|arena| {
            let solved = solve_parity(arena).expect("well-formed arena");
            let brute = brute_force_solve(arena).expect("within brute-force cap");
            usize::from(solved.winner != brute)
        })
        .sum();
    report(
        1,
        "solver vs brute-force oracle",
        disagreements == 0,
        format!("{}/500 arenas agree", 500 - disagreements),
    )
}

// ---------------------------------------------------------------- criterion 2

/// A retained positive verdict: both sides owned, plus the duplicator
/// witness.
pub struct PositiveSetGame {
    pub label: String,
    pub left: OmegaAutomaton,
    pub right: OmegaAutomaton,
    pub witness: MealyStrategy,
}

pub fn criterion_2_catalog_order() -> (CriterionReport, Vec<PositiveSetGame>) {
    let ab = Alphabet::new(2).unwrap();
    let sigma: Vec<_> = (1..=5).map(|n| sigma_complete(ab, n)).collect();
    let pi: Vec<_> = (1..=5).map(|n| pi_complete(ab, n)).collect();
    let djr: Vec<_> = (1..=4).map(|n| delta_jr(ab, n).unwrap()).collect();
    let s = |n: usize| &sigma[n - 1];
    let p = |n: usize| &pi[n - 1];
    let d = |n: usize| &djr[n - 1];

    let mut table: Vec<(String, &OmegaAutomaton, &OmegaAutomaton, bool)> = Vec::new();
    for n in 1..=4usize {
        table.push((
            format!("sigma{} <= sigma{}", n, n + 1),
            s(n),
            s(n + 1),
            true,
        ));
        table.push((
            format!("sigma{} <= sigma{}", n + 1, n),
            s(n + 1),
            s(n),
            false,
        ));
        table.push((format!("sigma{n} <= pi{n}"), s(n), p(n), false));
        table.push((format!("pi{n} <= sigma{n}"), p(n), s(n), false));
        table.push((format!("deltajr{n} <= sigma{n}"), d(n), s(n), true));
        table.push((format!("deltajr{n} <= pi{n}"), d(n), p(n), true));
    }
    for n in 1..=3usize {
        table.push((
            format!("sigma{} <= deltajr{}", n, n + 1),
            s(n),
            d(n + 1),
            true,
        ));
        table.push((
            format!("deltajr{} <= sigma{}", n + 1, n),
            d(n + 1),
            s(n),
            false,
        ));
    }
    assert_eq!(table.len(), 30);

    let results: Vec<(String, bool, bool, Option<PositiveSetGame>)> = table
        .par_iter()
        .map(|(label, a, b, expected)| {
            let out = leq_w(a, b, GameMode::Wadge).expect("catalog game");
            let positive = (out.reducible && *expected).then(|| PositiveSetGame {
                label: label.clone(),
                left: (*a).clone(),
                right: (*b).clone(),
                witness: out.witness.clone(),
            });
            (label.clone(), *expected, out.reducible, positive)
        })
        .collect();

    let wrong: Vec<String> = results
        .iter()
        .filter(|(_, exp, got, _)| exp != got)
        .map(|(l, exp, _, _)| format!("{l} (expected {exp})"))
        .collect();
    let positives = results.into_iter().filter_map(|(_, _, _, p)| p).collect();
    let rep = report(
        2,
        "catalog ordering truth table",
        wrong.is_empty(),
        if wrong.is_empty() {
            "30/30 comparisons as expected".into()
        } else {
            format!("mismatches: {}", wrong.join(", "))
        },
    );
    (rep, positives)
}

// ------------------------------------------------------ shared catalog data

struct MRedVerdict {
    holds: bool,
    /// For positives: per f-pair index, the chosen g-pair index.
    chosen: Vec<(usize, usize)>,
}

pub struct CatalogData {
    entries: Vec<CatalogFunction>,
    analyses: Vec<FunctionAnalysis>,
    pair_lists: Vec<Vec<ThresholdPair>>,
    verdicts: Vec<Vec<MRedVerdict>>,
}

impl CatalogData {
    pub fn build() -> CatalogData {
        let entries = function_catalog().expect("catalog builds");
        let analyses: Vec<FunctionAnalysis> = entries
            .par_iter()
            .map(|e| analyze(&e.fun).expect("catalog analysis"))
            .collect();
        let pair_lists: Vec<Vec<ThresholdPair>> =
            entries.iter().map(|e| critical_pairs(&e.fun)).collect();

        let cache: Mutex<HashMap<(usize, usize, usize, usize), bool>> = Mutex::new(HashMap::new());
        let game = |i: usize, pi: usize, j: usize, qj: usize| -> bool {
            let key = (i, pi, j, qj);
            if let Some(&v) = cache.lock().unwrap().get(&key) {
                return v;
            }
            let fp = pair_lists[i][pi];
            let gp = pair_lists[j][qj];
            let out = side_leq(
                &SideSpec::Level {
                    fun: &entries[i].fun,
                    low: fp.low,
                    high: fp.high,
                },
                &SideSpec::Level {
                    fun: &entries[j].fun,
                    low: gp.low,
                    high: gp.high,
                },
                GameMode::Wadge,
            )
            .expect("level game");
            cache.lock().unwrap().insert(key, out.reducible);
            out.reducible
        };

        let n = entries.len();
        let all_pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let flat: Vec<MRedVerdict> = all_pairs
            .par_iter()
            .map(|&(i, j)| {
                let mut chosen = Vec::new();
                for pi in 0..pair_lists[i].len() {
                    match (0..pair_lists[j].len()).find(|&qj| game(i, pi, j, qj)) {
                        Some(qj) => chosen.push((pi, qj)),
                        None => {
                            return MRedVerdict {
                                holds: false,
                                chosen,
                            }
                        }
                    }
                }
                MRedVerdict {
                    holds: true,
                    chosen,
                }
            })
            .collect();
        let mut verdicts: Vec<Vec<MRedVerdict>> = Vec::with_capacity(n);
        let mut it = flat.into_iter();
        for _ in 0..n {
            verdicts.push((0..n).map(|_| it.next().unwrap()).collect());
        }
        CatalogData {
            entries,
            analyses,
            pair_lists,
            verdicts,
        }
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn m_red(&self, i: usize, j: usize) -> bool {
        self.verdicts[i][j].holds
    }
}

// ---------------------------------------------------------------- criterion 4

pub struct PositiveLevelGame {
    pub f_index: usize,
    pub g_index: usize,
    pub f_pair: ThresholdPair,
    pub g_pair: ThresholdPair,
    pub witness: MealyStrategy,
}

fn criterion_4_pipeline_agreement(data: &CatalogData) -> (CriterionReport, Vec<PositiveLevelGame>) {
    let n = data.len();
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let games = data.m_red(i, j);
            let ranks = data.analyses[i].alpha < data.analyses[j].alpha
                || (data.analyses[i].alpha == data.analyses[j].alpha
                    && data.analyses[i].sided.leq(data.analyses[j].sided));
            if games != ranks {
                mismatches.push(format!(
                    "{} vs {} (games {}, ranks {})",
                    data.entries[i].name, data.entries[j].name, games, ranks
                ));
            }
        }
    }

    // re-derive the duplicator witnesses of the chosen games
    let positive_keys: Vec<(usize, usize, ThresholdPair, ThresholdPair)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| data.verdicts[i][j].holds)
        .flat_map(|(i, j)| {
            data.verdicts[i][j]
                .chosen
                .iter()
                .map(move |&(pi, qj)| (i, j, data.pair_lists[i][pi], data.pair_lists[j][qj]))
                .collect::<Vec<_>>()
        })
        .collect();
    let positives: Vec<PositiveLevelGame> = positive_keys
        .par_iter()
        .map(|&(i, j, fp, gp)| {
            let out = side_leq(
                &SideSpec::Level {
                    fun: &data.entries[i].fun,
                    low: fp.low,
                    high: fp.high,
                },
                &SideSpec::Level {
                    fun: &data.entries[j].fun,
                    low: gp.low,
                    high: gp.high,
                },
                GameMode::Wadge,
            )
            .expect("level game");
            assert!(out.reducible, "cached verdict must reproduce");
            PositiveLevelGame {
                f_index: i,
                g_index: j,
                f_pair: fp,
                g_pair: gp,
                witness: out.witness,
            }
        })
        .collect();

    let total = n * n;
    let rep = report(
        4,
        "game pipeline equals rank pipeline",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{total}/{total} ordered pairs agree over {} functions", n)
        } else {
            format!("disagreements: {}", mismatches.join("; "))
        },
    );
    (rep, positives)
}

// ---------------------------------------------------------------- criterion 3

pub struct PositiveFamilyGame {
    pub f_index: usize,
    pub family: IndexedFamily,
    pub target: IndexedFamily,
    pub witnesses: Vec<(usize, usize, MealyStrategy)>,
}

fn criterion_3_certification(
    cfg: &Config,
    data: &CatalogData,
    set_games: &[PositiveSetGame],
    level_games: &[PositiveLevelGame],
    family_games: &[PositiveFamilyGame],
) -> CriterionReport {
    let ab = Alphabet::new(2).unwrap();
    let lassos = sampling::random_lassos(cfg.seed.wrapping_add(3), ab, 6, cfg.replay_samples);

    let set_violations: usize = set_games
        .par_iter()
        .map(|g| {
            certify_witness(
                &SideSpec::Set(&g.left),
                &SideSpec::Set(&g.right),
                &g.witness,
                &lassos,
            )
            .expect("replay")
        })
        .sum();

    let level_violations: usize = level_games
        .par_iter()
        .map(|g| {
            certify_witness(
                &SideSpec::Level {
                    fun: &data.entries[g.f_index].fun,
                    low: g.f_pair.low,
                    high: g.f_pair.high,
                },
                &SideSpec::Level {
                    fun: &data.entries[g.g_index].fun,
                    low: g.g_pair.low,
                    high: g.g_pair.high,
                },
                &g.witness,
                &lassos,
            )
            .expect("replay")
        })
        .sum();

    let family_violations: usize = family_games
        .par_iter()
        .map(|fg| {
            fg.witnesses
                .iter()
                .map(|(n, m, w)| {
                    certify_witness(
                        &fg.family.components[*n].spec(),
                        &fg.target.components[*m].spec(),
                        w,
                        &lassos,
                    )
                    .expect("replay")
                })
                .sum::<usize>()
        })
        .sum();

    let strategies = set_games.len()
        + level_games.len()
        + family_games
            .iter()
            .map(|f| f.witnesses.len())
            .sum::<usize>();
    let violations = set_violations + level_violations + family_violations;
    report(
        3,
        "strategy certification by replay",
        violations == 0,
        format!(
            "{} strategies x {} lassos, {} violations",
            strategies, cfg.replay_samples, violations
        ),
    )
}

// ---------------------------------------------------------------- criterion 5

fn criterion_5_structure(data: &CatalogData) -> CriterionReport {
    let n = data.len();
    // quotient by mutual reducibility
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![i];
        class_of[i] = id;
        for j in i + 1..n {
            if class_of[j] == usize::MAX && data.m_red(i, j) && data.m_red(j, i) {
                class_of[j] = id;
                members.push(j);
            }
        }
        classes.push(members);
    }

    let mut problems: Vec<String> = Vec::new();
    // classes must be homogeneous in the frozen classification
    for members in &classes {
        let key = (
            data.entries[members[0]].alpha,
            data.entries[members[0]].sided,
        );
        if members
            .iter()
            .any(|&i| (data.entries[i].alpha, data.entries[i].sided) != key)
        {
            problems.push(format!(
                "mixed class {:?}",
                members
                    .iter()
                    .map(|&i| data.entries[i].name)
                    .collect::<Vec<_>>()
            ));
        }
    }

    let class_with = |alpha: usize, sided: SidedType| -> Option<usize> {
        (0..classes.len()).find(|&c| {
            let i = classes[c][0];
            data.entries[i].alpha == alpha && data.entries[i].sided == sided
        })
    };
    let strictly_below = |a: Option<usize>, b: Option<usize>| -> bool {
        match (a, b) {
            (Some(a), Some(b)) => {
                let (i, j) = (classes[a][0], classes[b][0]);
                data.m_red(i, j) && !data.m_red(j, i)
            }
            _ => false,
        }
    };
    let incomparable = |a: Option<usize>, b: Option<usize>| -> bool {
        match (a, b) {
            (Some(a), Some(b)) => {
                let (i, j) = (classes[a][0], classes[b][0]);
                !data.m_red(i, j) && !data.m_red(j, i)
            }
            _ => false,
        }
    };

    // rank 1: exactly the constants and the nonconstant continuous class
    let rank1: Vec<usize> = (0..classes.len())
        .filter(|&c| data.entries[classes[c][0]].alpha == 1)
        .collect();
    if rank1.len() != 2 {
        problems.push(format!("rank 1 has {} classes", rank1.len()));
    }
    if !strictly_below(class_with(1, SidedType::O), class_with(1, SidedType::T)) {
        problems.push("constants not strictly below continuous".into());
    }

    // ranks 2..4: four classes, left/right incomparable, then o, then t
    for alpha in 2..=4usize {
        let at: Vec<usize> = (0..classes.len())
            .filter(|&c| data.entries[classes[c][0]].alpha == alpha)
            .collect();
        if at.len() != 4 {
            problems.push(format!("rank {alpha} has {} classes", at.len()));
        }
        let l = class_with(alpha, SidedType::L);
        let r = class_with(alpha, SidedType::R);
        let o = class_with(alpha, SidedType::O);
        let t = class_with(alpha, SidedType::T);
        if !incomparable(l, r) {
            problems.push(format!("rank {alpha}: left/right not incomparable"));
        }
        for (lo, hi, label) in [(l, o, "l < o"), (r, o, "r < o"), (o, t, "o < t")] {
            if !strictly_below(lo, hi) {
                problems.push(format!("rank {alpha}: {label} fails"));
            }
        }
        if alpha < 4 && !strictly_below(t, class_with(alpha + 1, SidedType::L)) {
            problems.push(format!("rank {alpha}: top not below the next rank"));
        }
    }

    report(
        5,
        "quotient structure at each rank",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} classes: 2 at rank 1, then 4 per rank", classes.len())
        } else {
            problems.join("; ")
        },
    )
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6_ladder(data: &CatalogData) -> CriterionReport {
    let n = data.len();
    // well-founded height of each function in the strict quotient order
    let mut height = vec![0usize; n];
    // iterate to a fixpoint; the order is a finite strict partial order
    for _ in 0..n {
        for i in 0..n {
            let mut h = 0;
            for j in 0..n {
                if data.m_red(j, i) && !data.m_red(i, j) {
                    h = h.max(height[j] + 1);
                }
            }
            height[i] = h;
        }
    }
    let mut problems = Vec::new();
    for i in 0..n {
        let formula = m_rank(data.analyses[i].alpha, data.analyses[i].sided)
            .expect("catalog types are consistent");
        if formula != height[i] || formula != data.entries[i].m_rank {
            problems.push(format!(
                "{}: formula {}, ladder {}, expected {}",
                data.entries[i].name, formula, height[i], data.entries[i].m_rank
            ));
        }
    }
    report(
        6,
        "rank formula equals ladder position",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} functions placed", n)
        } else {
            problems.join("; ")
        },
    )
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7_separation_rank(
    data: &CatalogData,
    cfg: &Config,
) -> (CriterionReport, Vec<PositiveFamilyGame>) {
    let binary = Alphabet::new(2).unwrap();
    let results: Vec<(usize, Option<(usize, PositiveFamilyGame)>)> = (0..data.len())
        .into_par_iter()
        .map(|i| {
            let family = sep_family(&data.entries[i].fun).expect("sep family");
            for level in 1..=cfg.level_cap {
                let e = crate::wadge::catalog::delta_ji(binary, level).expect("catalog");
                let target = decompose(&SetOrPair::Set(e));
                let out = m_leq(&family, &target).expect("ladder game");
                if out.holds {
                    let fg = PositiveFamilyGame {
                        f_index: i,
                        family,
                        target,
                        witnesses: out.witnesses,
                    };
                    return (i, Some((level, fg)));
                }
            }
            (i, None)
        })
        .collect();

    let mut problems = Vec::new();
    let mut positives = Vec::new();
    for (i, res) in results {
        match res {
            Some((level, fg)) => {
                if level != data.analyses[i].alpha {
                    problems.push(format!(
                        "{}: sep rank {}, derivative rank {}",
                        data.entries[i].name, level, data.analyses[i].alpha
                    ));
                }
                positives.push(fg);
            }
            None => problems.push(format!(
                "{}: no separation level within cap",
                data.entries[i].name
            )),
        }
    }
    let rep = report(
        7,
        "separation rank equals derivative rank",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} functions, two independent pipelines agree", data.len())
        } else {
            problems.join("; ")
        },
    );
    (rep, positives)
}

// ---------------------------------------------------------------- criterion 8

fn criterion_8_derivative_oracle() -> CriterionReport {
    use treeoracle::CounterFunction;
    let ab = Alphabet::new(2).unwrap();
    let depth = 12;

    let instances: Vec<(&str, crate::realfun::FunctionAutomaton, CounterFunction)> = vec![
        (
            "constant",
            crate::realfun::constant_fn(ab, Rat::new(1, 2)),
            CounterFunction {
                values: vec![Rat::new(1, 2)],
            },
        ),
        (
            "open indicator",
            crate::realfun::char_fun(&sigma_complete(ab, 1)).unwrap(),
            CounterFunction {
                values: vec![Rat::zero(), Rat::one()],
            },
        ),
        (
            "staircase",
            crate::realfun::staircase_fn(),
            CounterFunction {
                values: vec![Rat::zero(), Rat::new(1, 2), Rat::one()],
            },
        ),
    ];

    let mut compared = 0usize;
    let mut problems = Vec::new();
    for (name, fun, oracle) in &instances {
        for t in critical_pairs(fun) {
            let chain = crate::bourgain::rank_chain(fun, &t).expect("chain");
            let oracle_stages = oracle.chain(t.low, t.high);
            if chain.stages.len() != oracle_stages.len() {
                problems.push(format!(
                    "{name} ({}, {}): {} symbolic stages vs {} oracle stages",
                    t.low,
                    t.high,
                    chain.stages.len(),
                    oracle_stages.len()
                ));
                continue;
            }
            for (nu, (stage, oracle_set)) in chain.stages.iter().zip(&oracle_stages).enumerate() {
                let symbolic = restrict_to_tree(stage, depth);
                let expected = oracle.tree_restriction(oracle_set, depth);
                compared += 1;
                if symbolic != expected {
                    problems.push(format!("{name} stage {nu} differs at depth {depth}"));
                }
            }
        }
    }
    report(
        8,
        "symbolic derivative vs counter-set oracle",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{compared} stages match exactly on depth-{depth} trees")
        } else {
            problems.join("; ")
        },
    )
}

/// Heap-indexed prefix tree of nodes whose cylinder meets the language.
fn restrict_to_tree(stage: &OmegaAutomaton, depth: usize) -> Vec<bool> {
    let live: Vec<bool> = (0..stage.state_count())
        .map(|s| !is_empty(&stage.rerooted(s)))
        .collect();
    let total = (1usize << (depth + 1)) - 1;
    let mut out = vec![false; total + 1];
    let mut stack = vec![(1usize, 0usize, stage.initial())];
    while let Some((node, d, s)) = stack.pop() {
        out[node] = live[s];
        if d < depth {
            stack.push((2 * node, d + 1, stage.step(s, 0)));
            stack.push((2 * node + 1, d + 1, stage.step(s, 1)));
        }
    }
    out
}

// ---------------------------------------------------------------- criterion 9

fn criterion_9_pass_encoding() -> CriterionReport {
    let ab3 = Alphabet::new(3).unwrap();
    let entries: Vec<(String, OmegaAutomaton)> = (1..=5)
        .map(|n| (format!("sigma{n}"), sigma_complete(ab3, n)))
        .chain((1..=5).map(|n| (format!("pi{n}"), pi_complete(ab3, n))))
        .collect();
    let problems: Vec<String> = entries
        .par_iter()
        .filter_map(|(name, a)| {
            let b = match pass_encode(a) {
                Ok(b) => b,
                Err(e) => return Some(format!("{name}: {e}")),
            };
            if b.alphabet().size() != 2 {
                return Some(format!("{name}: output alphabet not binary"));
            }
            let fwd = leq_w(a, &b, GameMode::Wadge).expect("game").reducible;
            let back = leq_w(&b, a, GameMode::Wadge).expect("game").reducible;
            if fwd && back {
                None
            } else {
                Some(format!("{name}: forward {fwd}, backward {back}"))
            }
        })
        .collect();
    report(
        9,
        "pass encoding preserves the degree",
        problems.is_empty(),
        if problems.is_empty() {
            "10/10 three-letter entries re-encode onto the binary alphabet".into()
        } else {
            problems.join("; ")
        },
    )
}

// --------------------------------------------------------------- criterion 10

fn criterion_10_interleave() -> CriterionReport {
    let ab = Alphabet::new(2).unwrap();
    let mut problems = Vec::new();
    for level in 2..=3usize {
        let s = crate::realfun::char_fun(&sigma_complete(ab, level - 1)).unwrap();
        let p = crate::realfun::char_fun(&pi_complete(ab, level - 1)).unwrap();
        let weights = [6, 5, 4, 3, 2, 1].map(Rat::int);
        let g = crate::realfun::interleave(&[&s, &p], &weights).expect("interleave");
        let family = sep_family(&g).expect("family");
        let target = decompose(&SetOrPair::Set(delta_jr(ab, level).unwrap()));
        let up = m_leq(&family, &target).expect("game").holds;
        let down = m_leq(&target, &family).expect("game").holds;
        if !(up && down) {
            problems.push(format!("level {level}: up {up}, down {down}"));
        }
    }
    report(
        10,
        "truncated interleave is join-complete at its level",
        problems.is_empty(),
        if problems.is_empty() {
            "levels 2 and 3 certified in both directions".into()
        } else {
            problems.join("; ")
        },
    )
}

// --------------------------------------------------------------- criterion 11

/// The word `prefix . tail^w` as a one-point safety automaton.
fn fixed_word(ab: Alphabet, prefix: &[usize], tail: usize) -> OmegaAutomaton {
    let k = ab.size();
    let n = prefix.len() + 2; // spine + tail loop + sink
    let sink = n - 1;
    let tail_state = n - 2;
    let mut delta: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, &a) in prefix.iter().enumerate() {
        let next = if i + 1 == prefix.len() {
            tail_state
        } else {
            i + 1
        };
        delta.push((0..k).map(|x| if x == a { next } else { sink }).collect());
    }
    delta.push(
        (0..k)
            .map(|x| if x == tail { tail_state } else { sink })
            .collect(),
    );
    delta.push(vec![sink; k]);
    let mut prios = vec![0usize; n];
    prios[sink] = 1;
    OmegaAutomaton::new(ab, 0, delta, Acceptance::Parity(prios)).unwrap()
}

fn criterion_11_separators() -> CriterionReport {
    let ab = Alphabet::new(2).unwrap();
    let mut pairs: Vec<(String, OmegaAutomaton, OmegaAutomaton)> = Vec::new();

    pairs.push((
        "0w vs 1w".into(),
        fixed_word(ab, &[], 0),
        fixed_word(ab, &[], 1),
    ));
    // twelve singleton pairs from distinct two-letter prefixes
    let prefixes = [[0, 0], [0, 1], [1, 0], [1, 1]];
    for (i, u) in prefixes.iter().enumerate() {
        for (j, v) in prefixes.iter().enumerate() {
            if i < j {
                pairs.push((
                    format!("{u:?}0w vs {v:?}0w"),
                    fixed_word(ab, u, 0),
                    fixed_word(ab, v, 0),
                ));
                pairs.push((
                    format!("{v:?}1w vs {u:?}1w"),
                    fixed_word(ab, v, 1),
                    fixed_word(ab, u, 1),
                ));
            }
        }
    }
    // counter-bounded sets behind distinct first letters
    let shifted =
        |letter: usize, k: usize| crate::wadge::shift(letter, &at_most_ones(ab, k)).unwrap();
    pairs.push(("0:le1 vs 1:le2".into(), shifted(0, 1), shifted(1, 2)));
    pairs.push(("0:le0 vs 1:le1".into(), shifted(0, 0), shifted(1, 1)));
    pairs.push(("1:le3 vs 0:le2".into(), shifted(1, 3), shifted(0, 2)));
    pairs.push((
        "deep singleton vs le0 behind 1".into(),
        fixed_word(ab, &[0, 1, 0, 1], 0),
        shifted(1, 0),
    ));
    pairs.push((
        "le1 behind 00 vs 1w".into(),
        crate::wadge::shift(0, &shifted(0, 1)).unwrap(),
        fixed_word(ab, &[], 1),
    ));
    pairs.push((
        "empty side".into(),
        fixed_word(ab, &[], 0),
        complement(&crate::automata::constant_automaton(ab, true)),
    ));
    pairs.push((
        "alternating tail vs le0 behind 0".into(),
        fixed_word(ab, &[1], 0),
        shifted(0, 0),
    ));

    assert!(
        pairs.len() >= 20,
        "need at least 20 pairs, have {}",
        pairs.len()
    );

    let problems: Vec<String> = pairs
        .par_iter()
        .filter_map(|(name, a, b)| match separate_closed(a, b) {
            Ok((clopen, c)) => {
                // double-check the two emptiness contracts independently
                let covers =
                    crate::automata::product_combine(a, &c, crate::automata::BoolOp::Minus)
                        .map(|d| is_empty(&d))
                        .unwrap_or(false);
                let avoids = crate::automata::product_combine(b, &c, crate::automata::BoolOp::And)
                    .map(|d| is_empty(&d))
                    .unwrap_or(false);
                if covers && avoids {
                    let _ = clopen;
                    None
                } else {
                    Some(format!("{name}: contract violated"))
                }
            }
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();

    let count = pairs.len();
    report(
        11,
        "clopen separators for closed pairs",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{count} disjoint closed pairs separated within depth 20")
        } else {
            problems.join("; ")
        },
    )
}
