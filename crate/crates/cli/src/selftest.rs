//! Golden-example suite: the worked single values every release must
//! reproduce, runnable anywhere the binary goes.

use colex::abwt::{build_abwt, invert_abwt_dfa};
use colex::index::Index;
use colex::lang_width::{
    decide_width_leq, language_width_bounds, verify_witness, SearchMode, WidthAnswer,
    DEFAULT_BUDGET_BYTES,
};
use colex::order::{
    brute_force_nfa_width, chain_partition, check_colex_axioms, compute_max_colex_order, dfa_width,
    ChainPartition, PartialOrder,
};
use colex::powerset::{check_powerset_bounds, nfa_equivalent, powerset_construct};
use colex::{testdata, Dfa};

type Check = (&'static str, fn() -> Result<(), String>);

pub fn run() -> bool {
    let checks: &[Check] = &[
        ("seven-state example parses and is trim", || {
            let a = testdata::width_two_automaton();
            let report = a.validate();
            expect(report.is_deterministic, "deterministic")?;
            expect(report.is_trim(), "trim")
        }),
        (
            "seven-state example has width 2 with the golden chains",
            || {
                let (w, cp) = dfa_width(&testdata::width_two());
                expect(w == 2, "width 2")?;
                expect(
                    cp.chains == testdata::WIDTH_TWO_CHAINS.map(|c| c.to_vec()).to_vec(),
                    "golden chains",
                )
            },
        ),
        ("golden transform sequences are reproduced", || {
            let d = testdata::width_two();
            let po = compute_max_colex_order(&d);
            let (_, cp) = dfa_width(&d);
            let t = build_abwt(&d, &po, &cp).map_err(|e| e.to_string())?;
            expect(t.chain_bits.to_bit_string() == "1000100", "CHAIN")?;
            expect(t.final_bits.to_bit_string() == "0001110", "FINAL")?;
            expect(t.in_deg.to_bit_string() == "10100100101010001", "IN_DEG")?;
            expect(t.out_deg.to_bit_string() == "01010101001001001", "OUT_DEG")?;
            let ix = Index::build(&t).map_err(|e| e.to_string())?;
            expect(ix.in_run_bits().to_bit_string() == "1001111000", "IN'")?;
            let back = invert_abwt_dfa(&t).map_err(|e| e.to_string())?;
            expect(back.isomorphic(&d), "round trip")
        }),
        ("six-state NFA accepts its golden orders", || {
            let a = testdata::wheeler_nfa();
            let total = PartialOrder::from_pairs(6, testdata::WHEELER_TOTAL_ORDER)
                .map_err(|e| e.to_string())?;
            let partial = PartialOrder::from_pairs(6, testdata::WHEELER_SECOND_ORDER)
                .map_err(|e| e.to_string())?;
            expect(check_colex_axioms(&a, &total).unwrap().ok(), "total order")?;
            expect(
                check_colex_axioms(&a, &partial).unwrap().ok(),
                "second order",
            )
        }),
        (
            "six-state NFA has width 1 and meets the subset bounds",
            || {
                let a = testdata::wheeler_nfa();
                let p = brute_force_nfa_width(&a, 6).map_err(|e| e.to_string())?;
                expect(p == 1, "width 1")?;
                let report = check_powerset_bounds(&a, p, 1 << 20).map_err(|e| e.to_string())?;
                expect(report.state_bound == 11, "state bound 11")?;
                expect(report.ok(), "bounds hold")
            },
        ),
        (
            "shared-language family: widths 3/2/2 and one minimum DFA",
            || {
                let d1 = testdata::shared_lang_min_dfa();
                let d2 = Dfa::try_from(testdata::shared_lang_split_a()).unwrap();
                let d3 = Dfa::try_from(testdata::shared_lang_split_b()).unwrap();
                expect(dfa_width(&d1).0 == 3, "width 3")?;
                expect(dfa_width(&d2).0 == 2, "width 2")?;
                expect(dfa_width(&d3).0 == 2, "width 2")?;
                expect(
                    nfa_equivalent(&d1, &d2, 1 << 20).unwrap()
                        && nfa_equivalent(&d2, &d3, 1 << 20).unwrap(),
                    "equivalent",
                )?;
                expect(d2.minimize().isomorphic(&d1), "minimize center")?;
                expect(d3.minimize().isomorphic(&d1), "minimize right")
            },
        ),
        ("shared-language family: width above 1 is certified", || {
            let minimal = testdata::shared_lang_min_dfa().minimize();
            let decision = decide_width_leq(
                &minimal,
                1,
                SearchMode::BoundedSearch,
                Some(6),
                DEFAULT_BUDGET_BYTES,
            )
            .map_err(|e| e.to_string())?;
            expect(decision.answer == WidthAnswer::Gt, "answer gt")?;
            let cert = decision.certificate.ok_or("missing certificate")?;
            verify_witness(&minimal, &cert)
        }),
        ("star-free family is pinned to width n", || {
            for n in 2..=4 {
                let d = testdata::starfree_family(n);
                let bounds = language_width_bounds(&d, 2 * n, DEFAULT_BUDGET_BYTES)
                    .map_err(|e| e.to_string())?;
                expect(bounds.lower == n && bounds.upper == n, "bounds = n")?;
            }
            Ok(())
        }),
        ("the two six-state NFAs share one transform", || {
            let n1 = testdata::colliding_nfa_a();
            let n2 = testdata::colliding_nfa_b();
            let po1 = PartialOrder::from_pairs(6, testdata::COLLIDING_A_ORDER).unwrap();
            let po2 = PartialOrder::from_pairs(6, testdata::COLLIDING_B_ORDER).unwrap();
            let cp = ChainPartition {
                chains: testdata::COLLIDING_CHAINS
                    .iter()
                    .map(|c| c.to_vec())
                    .collect(),
                antichain: vec![4, 6],
            };
            let t1 = build_abwt(&n1, &po1, &cp).map_err(|e| e.to_string())?;
            let t2 = build_abwt(&n2, &po2, &cp).map_err(|e| e.to_string())?;
            expect(t1 == t2, "equal transforms")?;
            expect(
                invert_abwt_dfa(&t1).is_err(),
                "inversion refuses the NFA transform",
            )
        }),
        ("index answers the golden pattern probes", || {
            let d = testdata::width_two();
            let po = compute_max_colex_order(&d);
            let (_, cp) = dfa_width(&d);
            let t = build_abwt(&d, &po, &cp).map_err(|e| e.to_string())?;
            let ix = Index::build(&t).map_err(|e| e.to_string())?;
            let w = |s: &str| d.alphabet().parse_word(s).unwrap();
            expect(ix.count(&w("aa")) == 2, "count aa")?;
            expect(
                ix.locate(&ix.match_subpaths(&w("aa"))) == vec![3, 5],
                "locate aa",
            )?;
            expect(!ix.exists(&w("cc")), "no cc")?;
            expect(ix.accepts_from_source(&w("ab")).1, "ab accepted")?;
            expect(ix.accepts_from_source(&w("abaa")).1, "abaa accepted")?;
            expect(!ix.accepts_from_source(&w("")).1, "empty word rejected")
        }),
        ("subset construction is the identity on a DFA", || {
            let d = testdata::width_two();
            let result = powerset_construct(&d, 1 << 20).map_err(|e| e.to_string())?;
            expect(result.dfa.isomorphic(&d), "isomorphic")
        }),
        (
            "minimum chain partitions carry antichain certificates",
            || {
                let po = PartialOrder::from_pairs(6, testdata::SHARED_LANG_MIN_HASSE).unwrap();
                let cp = chain_partition(&po);
                expect(
                    cp.width() == 3 && cp.antichain.len() == 3,
                    "width 3 certified",
                )
            },
        ),
    ];

    let mut all_ok = true;
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("selftest {name}: PASS"),
            Err(e) => {
                all_ok = false;
                println!("selftest {name}: FAIL ({e})");
            }
        }
    }
    all_ok
}

fn expect(condition: bool, what: &str) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(format!("expected {what}"))
    }
}
