//! Acceptance criteria for the library and CLI. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use nnq::{render, Format};
use nnq_core::{
    build_nested_table, catalog_group, generalized_quotient, minimal_normal_oracle, normal_closure,
    psi_relation, psi_relation_with_representatives, rho_lemma_check, rho_relation, theta,
    transitivity_report, verify_theorem, Coset, FiniteGroup, Permutation, Side, Subgroup,
};
use rand::{seq::SliceRandom, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_GROUPS: [&str; 8] = ["S3", "S4", "A4", "D4", "D5", "D6", "Q8", "C12"];
const EQUIV_GROUPS: [&str; 2] = ["S3", "S4"];
const RANDOM_SEEDS: u64 = 8;

/// `(subgroup generator, rows)`; each row is the row label followed by its cells, left to right
/// under the column labels given by the first row.
type Expected = (&'static str, [[&'static str; 7]; 6]);

const EXPECTED_TABLES: [Expected; 3] = [
    (
        "(1,2)",
        [
            ["()", "()", "(1,2)", "(2,3)", "(1,2,3)", "(1,3,2)", "(1,3)"],
            [
                "(1,2)", "(1,2)", "()", "(1,3,2)", "(1,3)", "(2,3)", "(1,2,3)",
            ],
            [
                "(2,3)", "(2,3)", "(1,2,3)", "()", "(1,2)", "(1,3)", "(1,3,2)",
            ],
            [
                "(1,2,3)", "(1,2,3)", "(2,3)", "(1,3)", "(1,3,2)", "()", "(1,2)",
            ],
            [
                "(1,3,2)", "(1,3,2)", "(1,3)", "(1,2)", "()", "(1,2,3)", "(2,3)",
            ],
            [
                "(1,3)", "(1,3)", "(1,3,2)", "(1,2,3)", "(2,3)", "(1,2)", "()",
            ],
        ],
    ),
    (
        "(1,3)",
        [
            ["()", "()", "(1,3)", "(2,3)", "(1,3,2)", "(1,2)", "(1,2,3)"],
            [
                "(1,3)", "(1,3)", "()", "(1,2,3)", "(1,2)", "(1,3,2)", "(2,3)",
            ],
            [
                "(2,3)", "(2,3)", "(1,3,2)", "()", "(1,3)", "(1,2,3)", "(1,2)",
            ],
            [
                "(1,3,2)", "(1,3,2)", "(2,3)", "(1,2)", "(1,2,3)", "(1,3)", "()",
            ],
            [
                "(1,2)", "(1,2)", "(1,2,3)", "(1,3,2)", "(2,3)", "()", "(1,3)",
            ],
            [
                "(1,2,3)", "(1,2,3)", "(1,2)", "(1,3)", "()", "(2,3)", "(1,3,2)",
            ],
        ],
    ),
    (
        "(2,3)",
        [
            ["()", "()", "(2,3)", "(1,2)", "(1,3,2)", "(1,2,3)", "(1,3)"],
            [
                "(2,3)", "(2,3)", "()", "(1,2,3)", "(1,3)", "(1,2)", "(1,3,2)",
            ],
            [
                "(1,2)", "(1,2)", "(1,3,2)", "()", "(2,3)", "(1,3)", "(1,2,3)",
            ],
            [
                "(1,3,2)", "(1,3,2)", "(1,2)", "(1,3)", "(1,2,3)", "()", "(2,3)",
            ],
            [
                "(1,2,3)", "(1,2,3)", "(1,3)", "(2,3)", "()", "(1,3,2)", "(1,2)",
            ],
            [
                "(1,3)", "(1,3)", "(1,2,3)", "(1,3,2)", "(1,2)", "(2,3)", "()",
            ],
        ],
    ),
];

/// H-coset header groups of each expected table, left to right.
const EXPECTED_HEADERS: [[&str; 3]; 3] = [
    ["()", "(2,3)", "(1,3,2)"],
    ["()", "(2,3)", "(1,2)"],
    ["()", "(1,2)", "(1,2,3)"],
];

struct Outcome {
    failures: Vec<String>,
    checks: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn perm(g: &FiniteGroup, s: &str) -> Permutation {
    Permutation::parse(s, Some(g.degree())).unwrap()
}

fn idx(g: &FiniteGroup, s: &str) -> usize {
    g.index_of(&perm(g, s)).unwrap()
}

fn sub<'g>(g: &'g FiniteGroup, gens: &[&str]) -> Subgroup<'g> {
    let gens: Vec<Permutation> = gens.iter().map(|s| perm(g, s)).collect();
    g.subgroup_generated(&gens).unwrap()
}

fn label(h: &Subgroup<'_>) -> String {
    format!("{}<{}>", h.parent().label(), h.generators_string())
}

fn groups(names: &[&str]) -> Vec<FiniteGroup> {
    names.iter().map(|n| catalog_group(n).unwrap()).collect()
}

fn normalized_row(line: &str) -> String {
    line.split_whitespace()
        .filter(|t| *t != "|")
        .collect::<Vec<_>>()
        .join(" ")
}

fn s3_table_reproduction(out: &mut Outcome) {
    let s3 = catalog_group("S3").unwrap();
    for ((gen, rows), headers) in EXPECTED_TABLES.iter().zip(EXPECTED_HEADERS) {
        let h = sub(&s3, &[gen]);
        let nc = normal_closure(&h);
        out.check(nc.order() == 6, || {
            format!("nc(<{gen}>) has order {}", nc.order())
        });
        let table = build_nested_table(&h);
        out.check(table.nc_cosets.len() == 1, || {
            format!("<{gen}>: expected one nc(H) class")
        });
        let reps: Vec<&str> = table.nc_cosets[0]
            .h_cosets
            .iter()
            .map(|c| c.rep.as_str())
            .collect();
        out.check(reps == headers, || {
            format!("<{gen}>: H-coset header order {reps:?}")
        });
        let cols = &rows[0][1..];
        for row in rows {
            for (col, &expected) in cols.iter().zip(&row[1..]) {
                let got = table.cell(row[0], col);
                out.check(got == Some(expected), || {
                    format!(
                        "<{gen}>: cell [{}][{col}] = {got:?}, expected {expected}",
                        row[0]
                    )
                });
            }
        }
    }

    let t12 = build_nested_table(&sub(&s3, &["(1,2)"]));
    out.check(t12.cell("(1,2)", "(2,3)") == Some("(1,3,2)"), || {
        "<(1,2)> spot cell".into()
    });
    let t23 = build_nested_table(&sub(&s3, &["(2,3)"]));
    out.check(t23.cell("(2,3)", "(1,2)") == Some("(1,2,3)"), || {
        "<(2,3)> spot cell".into()
    });

    // rendered forms
    let json: serde_json::Value = serde_json::from_str(&render(&t12, Format::Json)).unwrap();
    let nc_cosets = json["nc_cosets"].as_array().unwrap();
    let shape: Vec<usize> = nc_cosets[0]["h_cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["elements"].as_array().unwrap().len())
        .collect();
    out.check(nc_cosets.len() == 1 && shape == [2, 2, 2], || {
        format!("<(1,2)> JSON grouping {shape:?}")
    });
    let text = render(&t23, Format::Text);
    let first_data_row = text
        .lines()
        .skip_while(|l| !l.starts_with("+="))
        .nth(1)
        .map(normalized_row)
        .unwrap_or_default();
    out.check(
        first_data_row.starts_with("() (2,3) (1,2) (1,3,2) (1,2,3) (1,3)"),
        || format!("<(2,3)> first text row {first_data_row:?}"),
    );
}

fn closure_sweep(out: &mut Outcome) -> usize {
    let mut instances = 0;
    for g in groups(&SWEEP_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            instances += 1;
            let r = verify_theorem(&h);
            out.check(r.equal, || format!("{}: S != nc(H)", label(&h)));
            out.check(r.partition_equal, || {
                format!("{}: ~ classes != nc(H) cosets", label(&h))
            });
        }
    }
    out.check(instances >= 80, || {
        format!("only {instances} subgroup instances")
    });
    instances
}

fn counterexamples(out: &mut Outcome) {
    let s4 = catalog_group("S4").unwrap();
    let h = sub(&s4, &["(3,4)"]);
    let psi = psi_relation(&h);
    let (e, t, c) = (idx(&s4, "()"), idx(&s4, "(1,2)"), idx(&s4, "(1,2,3,4)"));
    out.check(psi.is_reflexive(), || "psi not reflexive".into());
    out.check(psi.is_symmetric(), || "psi not symmetric".into());
    out.check(!transitivity_report(&psi).transitive, || {
        "psi transitive".into()
    });
    out.check(psi.related(e, t), || "() psi (1,2) is false".into());
    out.check(psi.related(t, c), || "(1,2) psi (1,2,3,4) is false".into());
    out.check(!psi.related(e, c), || "() psi (1,2,3,4) is true".into());

    let s3 = catalog_group("S3").unwrap();
    let h = sub(&s3, &["(2,3)"]);
    let blocks = h.all_blocks();
    let block = |a: &str, b: &str| {
        let m = h.block_of(idx(&s3, a), idx(&s3, b)).members;
        blocks.iter().position(|x| x.members == m).unwrap()
    };
    let (hh, b1212, h12) = (
        block("()", "()"),
        block("(1,2)", "(1,2)"),
        block("()", "(1,2)"),
    );
    let rho = rho_relation(&h);
    out.check(!transitivity_report(&rho).transitive, || {
        "rho transitive".into()
    });
    out.check(rho.related(hh, b1212), || {
        "HH rho (1,2)H(1,2)H is false".into()
    });
    out.check(rho.related(b1212, h12), || {
        "(1,2)H(1,2)H rho H(1,2)H is false".into()
    });
    out.check(!rho.related(hh, h12), || "HH rho H(1,2)H is true".into());
}

fn relation_equivalence(out: &mut Outcome) {
    for g in groups(&EQUIV_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            let psi = psi_relation(&h);
            let blocks = h.all_blocks();
            let cosets: Vec<Coset> = (0..g.order()).map(|a| h.coset_of(a, Side::Left)).collect();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let shared = blocks.iter().any(|blk| {
                        blk.contains_all(&cosets[a].members) && blk.contains_all(&cosets[b].members)
                    });
                    let th = theta(&h, &cosets[a], &cosets[b]).unwrap();
                    let ps = psi.related(a, b);
                    out.check(shared == th && th == ps, || {
                        format!(
                            "{}: ({a},{b}) block={shared} theta={th} psi={ps}",
                            label(&h)
                        )
                    });
                }
            }
        }
    }
}

fn representative_independence(out: &mut Outcome) {
    for g in groups(&EQUIV_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            let psi = psi_relation(&h);
            let part = h.coset_partition(Side::Left);
            let theta_canonical: Vec<Vec<bool>> = part
                .classes
                .iter()
                .map(|x| {
                    part.classes
                        .iter()
                        .map(|y| {
                            let cx = h.coset_of(x[0], Side::Left);
                            let cy = h.coset_of(y[0], Side::Left);
                            theta(&h, &cx, &cy).unwrap()
                        })
                        .collect()
                })
                .collect();
            for seed in 0..RANDOM_SEEDS {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let resampled = psi_relation_with_representatives(&h, |_, members| {
                    *members.choose(&mut rng).unwrap()
                });
                out.check(resampled == psi, || {
                    format!("{}: seed {seed} psi differs", label(&h))
                });

                // theta evaluated on random representatives of the same two cosets
                for (i, x) in part.classes.iter().enumerate() {
                    for (j, y) in part.classes.iter().enumerate() {
                        let mut with_rep = |class: &Vec<usize>| Coset {
                            side: Side::Left,
                            representative: *class.choose(&mut rng).unwrap(),
                            members: class.clone(),
                        };
                        let (cx, cy) = (with_rep(x), with_rep(y));
                        let got = theta(&h, &cx, &cy).unwrap();
                        out.check(got == theta_canonical[i][j], || {
                            format!("{}: seed {seed} theta({i},{j}) differs", label(&h))
                        });
                    }
                }
            }
        }
    }
}

fn oracle_equality(out: &mut Outcome) {
    for g in groups(&SWEEP_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            let oracle = minimal_normal_oracle(&h).unwrap();
            out.check(normal_closure(&h) == oracle, || {
                format!("{}: oracle mismatch", label(&h))
            });
        }
    }
}

fn rho_consistency(out: &mut Outcome) {
    for g in groups(&SWEEP_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            let r = rho_lemma_check(&h);
            out.check(r.consistent, || {
                format!("{}: rho check inconsistent", label(&h))
            });
            if h.is_normal() {
                out.check(r.rho_transitive && r.matches_nc, || {
                    format!(
                        "{}: normal but rho_transitive={} matches_nc={}",
                        label(&h),
                        r.rho_transitive,
                        r.matches_nc
                    )
                });
            }
        }
    }
}

fn structural(out: &mut Outcome) {
    for g in groups(&SWEEP_GROUPS) {
        for h in g.all_subgroups().unwrap() {
            let q = generalized_quotient(&h);
            out.check(q.is_latin_square(), || {
                format!("{}: quotient not Latin", label(&h))
            });
            out.check(q.has_kernel_identity(), || {
                format!("{}: kernel is not identity", label(&h))
            });
            out.check(q.order() * q.kernel.order() == g.order(), || {
                format!("{}: |G/N| * |N| != |G|", label(&h))
            });
            if h.is_normal() {
                let direct = nnq_core::quotient_group(&h).unwrap();
                out.check(
                    direct.is_latin_square() && direct.has_kernel_identity(),
                    || format!("{}: ordinary quotient table", label(&h)),
                );
            }

            let part = h.coset_partition(Side::Left);
            out.check(
                part.len() * h.order() == g.order()
                    && part.classes.iter().all(|c| c.len() == h.order()),
                || format!("{}: Lagrange", label(&h)),
            );
            for blk in h.all_blocks() {
                let union = blk
                    .members
                    .iter()
                    .all(|&x| blk.contains_all(&part.classes[part.class_of[x]]));
                out.check(union, || {
                    format!("{}: block not a union of cosets", label(&h))
                });
            }
        }
    }
}

fn main() {
    type Criterion = (&'static str, Option<Duration>, fn(&mut Outcome));
    let criteria: [Criterion; 8] = [
        (
            "1 S3 table reproduction",
            Some(Duration::from_secs(1)),
            s3_table_reproduction,
        ),
        ("2 S = nc(H) sweep", Some(Duration::from_secs(10)), |o| {
            closure_sweep(o);
        }),
        ("3 counterexample reproduction", None, counterexamples),
        (
            "4 block, theta and psi equivalence",
            Some(Duration::from_secs(10)),
            relation_equivalence,
        ),
        (
            "5 representative independence",
            None,
            representative_independence,
        ),
        ("6 oracle equality", None, oracle_equality),
        ("7 block-relation consistency", None, rho_consistency),
        ("8 structural invariants", None, structural),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let mut outcome = Outcome::new();
        let start = Instant::now();
        run(&mut outcome);
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            outcome.check(elapsed < limit, || {
                format!("took {elapsed:?}, limit {limit:?}")
            });
        }
        let ok = outcome.failures.is_empty();
        println!(
            "[{}] criterion {name}: {} checks, {} failures ({:.3}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.checks,
            outcome.failures.len(),
            elapsed.as_secs_f64()
        );
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
