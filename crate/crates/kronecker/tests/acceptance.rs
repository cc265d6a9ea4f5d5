//! Acceptance suite: every formula the crate implements, checked at full
//! stated scale against independent routes and the brute-force oracle.
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion pass lines.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use kronecker::ext::{inj_pair, inj_proj, product, product_sets};
use kronecker::oracle::{
    build_ext_table, build_pointed_table, enumerate_class, ext_middle_terms, green_frame_check,
    hall_number, hall_profile, pointed_ext_dim, pointed_variants, verify_pair, EnumBudget,
    ExtTable, GlueMode, OracleCtx, PointedFactorizations, PointedSymbol,
};
use kronecker::order::{
    dominance_eqsum_parts, elementary_chain_witness, elementary_gen_maj, gen_maj, gen_maj_via_x,
    min_dominating_partition, x_vector,
};
use kronecker::partition::Partition;
use kronecker::preinj::{
    chain_product, chain_product_by_fold, embedding_exists_genmaj, embedding_exists_wdom,
    membership_by_products, minimal_cokernel, multiplicities_from_partition,
    partition_from_multiplicities,
};
use kronecker::symbol::{
    class_size, ext_dim, hom_dim, symbols_up_to, symbols_with_dim, DecompSymbol, DimVector, Indec,
    SymbolSet,
};

const CAP44: DimVector = DimVector { a: 4, b: 4 };
const CAP33: DimVector = DimVector { a: 3, b: 3 };

fn table44(q: u32) -> &'static ExtTable {
    static T2: OnceLock<ExtTable> = OnceLock::new();
    static T3: OnceLock<ExtTable> = OnceLock::new();
    let cell = match q {
        2 => &T2,
        3 => &T3,
        _ => panic!("tables are built for q = 2, 3"),
    };
    cell.get_or_init(|| build_ext_table(q, CAP44).expect("table build"))
}

fn sym(s: &str) -> DecompSymbol {
    s.parse().unwrap()
}

fn inj_sym(p: &Partition) -> DecompSymbol {
    DecompSymbol::inj_from_partition(p)
}

fn pass(name: &str) {
    println!("[acceptance] {name}: PASS");
}

/// Criterion 1: products of all symbol pairs with total dimension <= (4,4)
/// match the brute-force middle-term sets over F_2 and F_3 exactly, after
/// discarding classes the field is too small to realize; the two field runs
/// agree up to exactly those unrealizable classes.
#[test]
fn field_independence_up_to_4_4() {
    let symbols = symbols_up_to(CAP44);
    let mut pairs = Vec::new();
    for a in &symbols {
        for b in &symbols {
            if (a.dim_vector() + b.dim_vector()).fits_in(CAP44) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    println!(
        "[acceptance] field independence: {} symbols, {} pairs",
        symbols.len(),
        pairs.len()
    );
    for q in [2u32, 3] {
        let table = table44(q);
        let bad: Vec<String> = pairs
            .par_iter()
            .filter_map(|(a, b)| {
                let r = verify_pair(a, b, table);
                if r.is_match() {
                    None
                } else {
                    Some(format!(
                        "{} * {} over F_{}: missing [{}] extra [{}]",
                        a, b, q, r.missing, r.extra
                    ))
                }
            })
            .collect();
        assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
    }
    // cross-field agreement: the F_2 run is the F_3 run minus classes that
    // do not exist over F_2 (class sizes grow with q, so never vice versa)
    let t2 = table44(2);
    let t3 = table44(3);
    pairs.par_iter().for_each(|(a, b)| {
        let m2 = t2.middles(a, b);
        let m3 = t3.middles(a, b);
        for g in m2.iter() {
            assert!(m3.contains(g), "{a} * {b}: {g} realized over F_2 only");
        }
        for g in m3.difference(&m2).iter() {
            assert_eq!(class_size(g, 2), 0, "{a} * {b}: {g} missing over F_2");
        }
    });
    pass("field independence at (4,4), q = 2 and 3");
}

/// Criterion 2: the Hom/Ext dimension tables for placed indecomposables of
/// total dimension <= 6 match rank computations on explicit matrices.
#[test]
fn hom_ext_dimension_tables() {
    for q in [2u32, 3] {
        let ctx = OracleCtx::new(q, DimVector::new(6, 6)).unwrap();
        let mut placed = Vec::new();
        for n in 0..=2u32 {
            placed.push((
                Indec::Proj(n),
                kronecker::oracle::build_indec(&kronecker::oracle::IndecSpec::Proj(n), ctx.field())
                    .unwrap(),
            ));
            placed.push((
                Indec::Inj(n),
                kronecker::oracle::build_indec(&kronecker::oracle::IndecSpec::Inj(n), ctx.field())
                    .unwrap(),
            ));
        }
        for d in 1..=3u32 {
            for (k, pt) in ctx.points(d).to_vec().iter().take(2).enumerate() {
                for t in 1..=3u32 {
                    if 2 * t * d <= 6 {
                        placed.push((
                            Indec::Reg {
                                tag: 10 * d + k as u32,
                                degree: d,
                                len: t,
                            },
                            ctx.reg_rep(pt, t),
                        ));
                    }
                }
            }
        }
        let mut checked = 0usize;
        for (xi, xr) in &placed {
            for (yi, yr) in &placed {
                assert_eq!(
                    hom_dim(xi, yi),
                    kronecker::oracle::hom_dim_repr(xr, yr, ctx.field()) as u64,
                    "Hom({xi:?}, {yi:?}) over F_{q}"
                );
                assert_eq!(
                    ext_dim(xi, yi),
                    kronecker::oracle::ext_dim_repr(xr, yr, ctx.field()) as u64,
                    "Ext({xi:?}, {yi:?}) over F_{q}"
                );
                checked += 2;
            }
        }
        assert!(checked > 200, "table sweep must be substantial: {checked}");
    }
    pass("Hom/Ext tables vs ranks, dimension <= 6, q = 2 and 3");
}

/// Criterion 3: the preinjective pair product: cardinality floor((j-i)/2)+1
/// below the boundary, the exact member list, and oracle confirmation for
/// i, j <= 4 (Ext-coset gluing; the middle terms reach dimension (8,10)).
#[test]
fn inj_pair_product_formula() {
    let budget = EnumBudget::default();
    let ctx2 = OracleCtx::new(2, DimVector::new(8, 10)).unwrap();
    let ctx3 = OracleCtx::new(3, DimVector::new(8, 10)).unwrap();
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            let set = inj_pair(i, j);
            if i as i64 - j as i64 >= -1 {
                assert_eq!(set.len(), 1);
                assert!(set.contains(&DecompSymbol::from_inj(vec![i, j])));
            } else {
                let expect_len = ((j - i) / 2 + 1) as usize;
                assert_eq!(set.len(), expect_len, "|I_{i} * I_{j}|");
                for s in 0..=(j - i) / 2 {
                    assert!(set.contains(&DecompSymbol::from_inj(vec![j - s, i + s])));
                }
            }
            for ctx in [&ctx2, &ctx3] {
                let got = ext_middle_terms(
                    &DecompSymbol::from_inj(vec![i]),
                    &DecompSymbol::from_inj(vec![j]),
                    ctx,
                    budget,
                    GlueMode::ExtCosets,
                )
                .unwrap();
                assert_eq!(got, set, "oracle I_{i} * I_{j} over F_{}", ctx.q());
            }
        }
    }
    pass("preinjective pair products, i, j <= 4, oracle-confirmed at q = 2, 3");
}

/// Criterion 4: {[I_n]} * {[P_m]} is the split class plus all distinct-tube
/// regular classes of weight n+m+1, for n+m <= 3, by full gluing enumeration.
#[test]
fn inj_proj_product_formula() {
    let budget = EnumBudget::default();
    for q in [2u32, 3] {
        let ctx = OracleCtx::new(q, CAP44).unwrap();
        for n in 0..=3u32 {
            for m in 0..=3u32 {
                if n + m > 3 {
                    continue;
                }
                let alpha = DecompSymbol::from_inj(vec![n]);
                let beta = DecompSymbol::from_proj(vec![m]);
                let formula = inj_proj(n, m);
                assert_eq!(product(&alpha, &beta), formula);
                let mut expected = formula.clone();
                expected.retain(|g| class_size(g, q as u64) > 0);
                let got =
                    ext_middle_terms(&alpha, &beta, &ctx, budget, GlueMode::Full).unwrap();
                assert_eq!(got, expected, "I_{n} * P_{m} over F_{q}");
            }
        }
    }
    pass("I_n * P_m = regulars(n+m+1) + split, n+m <= 3, oracle-confirmed at q = 2, 3");
}

/// Criterion 5: the chain product of an increasing preinjective word equals
/// the dominance down-set, for all partitions of weight <= 6 and recorded
/// length <= 4.
#[test]
fn increasing_chain_products() {
    let mut count = 0usize;
    for w in 0..=6u32 {
        for base in Partition::all_of_max_len(w, 4) {
            for len in base.nonzero_len()..=4 {
                let a = base.padded(len);
                let fold = chain_product_by_fold(&a);
                let dominated = chain_product(&a);
                assert_eq!(fold, dominated, "a = {a}");
                count += 1;
            }
        }
    }
    assert!(count >= 70, "swept {count} recorded partitions");
    pass("chain products equal dominance down-sets, |a| <= 6, length <= 4");
}

/// Criterion 6: generalized majorization: definition = x-vector route =
/// elementary chain decomposition = symbolic membership, exhaustively for
/// |c| <= 8.
#[test]
fn gen_majorization_equivalences() {
    let mut membership_cache: HashMap<(Vec<u32>, Vec<u32>), SymbolSet> = HashMap::new();
    let mut triples = 0usize;
    for wc in 0..=8u32 {
        for c in Partition::all_of(wc) {
            for wb in 0..=wc {
                for b in Partition::all_of(wb) {
                    for a in Partition::all_of(wc - wb) {
                        triples += 1;
                        let gm = gen_maj(&c, &b, &a);
                        match gen_maj_via_x(&c, &b, &a) {
                            Ok(v) => assert_eq!(gm, v, "x-vector route: c={c} b={b} a={a}"),
                            Err(_) => {
                                assert!(!gm, "side conditions fail yet gen_maj holds: c={c} b={b} a={a}")
                            }
                        }
                        let witness = elementary_chain_witness(&c, &b, &a);
                        assert_eq!(gm, witness.is_some(), "chain route: c={c} b={b} a={a}");
                        if let Some(chain) = witness {
                            assert_eq!(chain.first().unwrap(), &b);
                            assert_eq!(chain.last().unwrap(), &c);
                            let n = a
                                .nonzero_len()
                                .max(c.nonzero_len().saturating_sub(b.nonzero_len()));
                            for j in 1..=n {
                                assert!(elementary_gen_maj(&chain[j], &chain[j - 1], a.part(j)));
                            }
                        }
                        // symbolic membership, cached per (a-padded, b)
                        let n = a
                            .nonzero_len()
                            .max(c.nonzero_len().saturating_sub(b.nonzero_len()));
                        let m = b.nonzero_len();
                        if c.nonzero_len() <= m + n {
                            let apad = a.padded(n);
                            let btrim = b.trimmed_partition();
                            let key = (apad.parts().to_vec(), btrim.parts().to_vec());
                            let set = membership_cache.entry(key).or_insert_with(|| {
                                product_sets(
                                    &chain_product(&apad),
                                    &SymbolSet::singleton(inj_sym(&btrim)),
                                )
                            });
                            let member = set.contains(&inj_sym(&c.padded(m + n)));
                            assert_eq!(gm, member, "membership route: c={c} b={b} a={a}");
                        } else {
                            assert!(!gm);
                        }
                    }
                }
            }
        }
    }
    println!("[acceptance] gen. majorization: {triples} triples");
    // the m = 0 reduction to plain dominance
    for wc in 0..=8u32 {
        for c in Partition::all_of(wc) {
            for a in Partition::all_of(wc) {
                assert_eq!(
                    gen_maj(&c, &Partition::empty(), &a),
                    dominance_eqsum_parts(&c, &a)
                );
            }
        }
    }
    pass("generalized majorization equivalences, |c| <= 8");
}

/// Criterion 7: embeddings of preinjectives: the weighted-dominance
/// criterion, the x-vector criterion, and symbolic exact-sequence existence
/// agree for |c| <= 10; the minimal cokernel is dominance-minimal among all
/// symbolic cokernels for |c| <= 8.
#[test]
fn embedding_criteria() {
    // sweep recorded forms: stripped partitions plus up to two extra zeros
    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for wc in 0..=10u32 {
        for c0 in Partition::all_of(wc) {
            for zc in 0..=2usize {
                let c = c0.padded(c0.nonzero_len() + zc);
                for wb in 0..=wc {
                    for b0 in Partition::all_of(wb) {
                        for zb in 0..=2usize {
                            let b = b0.padded(b0.nonzero_len() + zb);
                            if b.len() <= c.len() {
                                pairs.push((b.clone(), c.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    let results: Vec<(Partition, Partition, bool)> = pairs
        .par_iter()
        .map(|(b, c)| {
            let n = c.len() - b.len();
            let gm = embedding_exists_genmaj(b, c, n);
            // multiplicity translation
            let sub_m: Vec<i64> = multiplicities_from_partition(b)
                .iter()
                .map(|&x| x as i64)
                .collect();
            let amb_m: Vec<i64> = multiplicities_from_partition(c)
                .iter()
                .map(|&x| x as i64)
                .collect();
            let wd = embedding_exists_wdom(&sub_m, &amb_m).unwrap();
            assert_eq!(gm, wd, "criteria disagree: b={b} c={c} n={n}");
            assert_eq!(partition_from_multiplicities(&multiplicities_from_partition(b)).parts(), b.parts());
            // symbolic: some quotient partition realizes an exact sequence;
            // all candidates at once through the full dominance down-set
            let w = c.weight() - b.weight();
            let any_a = if n == 0 {
                b.parts() == c.parts()
            } else {
                let top = Partition::new(vec![w]).padded(n);
                product_sets(
                    &chain_product(&top),
                    &SymbolSet::singleton(inj_sym(b)),
                )
                .contains(&inj_sym(c))
            };
            (b.clone(), c.clone(), gm == any_a)
        })
        .collect();
    for (b, c, ok) in &results {
        assert!(ok, "symbolic existence disagrees: b={b} c={c}");
    }
    println!("[acceptance] embeddings: {} recorded pairs", results.len());

    // minimality of the cokernel at |c| <= 8
    let mut product_cache: HashMap<(Vec<u32>, Vec<u32>), SymbolSet> = HashMap::new();
    let mut checked = 0usize;
    for wc in 0..=8u32 {
        for c0 in Partition::all_of(wc) {
            for zc in 0..=1usize {
                let c = c0.padded(c0.nonzero_len() + zc);
                for wb in 0..=wc {
                    for b in Partition::all_of(wb) {
                        if b.nonzero_len() > c.len() {
                            continue;
                        }
                        let n = c.len() - b.nonzero_len();
                        let Some(a_star) = minimal_cokernel(&b, &c, n) else {
                            continue;
                        };
                        checked += 1;
                        let target = inj_sym(&c);
                        let ib = SymbolSet::singleton(inj_sym(&b));
                        // the minimal cokernel realizes the sequence
                        let apad = a_star.padded(n);
                        let key = (apad.parts().to_vec(), b.parts().to_vec());
                        let set = product_cache.entry(key).or_insert_with(|| {
                            product_sets(&SymbolSet::singleton(inj_sym(&apad)), &ib)
                        });
                        assert!(
                            set.contains(&target),
                            "minimal cokernel fails: b={b} c={c} a={a_star}"
                        );
                        // and is dominated by every partition that does
                        for a2 in Partition::all_of_max_len(c.weight() - b.weight(), n) {
                            let apad = a2.padded(n);
                            let key = (apad.parts().to_vec(), b.parts().to_vec());
                            let set = product_cache.entry(key).or_insert_with(|| {
                                product_sets(&SymbolSet::singleton(inj_sym(&apad)), &ib)
                            });
                            if set.contains(&target) {
                                assert!(
                                    dominance_eqsum_parts(&a_star, &a2),
                                    "a*={a_star} not below a'={a2} for b={b} c={c}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 200, "minimality sweep too small: {checked}");
    pass("embedding criteria ( |c| <= 10 ) and minimal cokernels ( |c| <= 8 )");
}

/// Criterion 8: class sizes: the counting formula matches one-by-one
/// enumeration for every symbol up to (4,4) over F_2 and F_3; the degree-1
/// regular simple class has q+1 members; sizes grow with the field.
#[test]
fn class_size_counts() {
    let symbols = symbols_up_to(CAP44);
    for q in [2u32, 3] {
        let ctx = OracleCtx::new(q, CAP44).unwrap();
        let bad: Vec<String> = symbols
            .par_iter()
            .filter_map(|s| {
                let reps = enumerate_class(s, &ctx);
                let expect = class_size(s, q as u64);
                if reps.len() as u128 == expect {
                    None
                } else {
                    Some(format!("{s} over F_{q}: {} reps vs {expect}", reps.len()))
                }
            })
            .collect();
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }
    for q in [2u64, 3, 5] {
        assert_eq!(class_size(&sym("|(1)@1|"), q), (q + 1) as u128);
    }
    // monotone in q; constant only for symbols without regular part
    for s in &symbols {
        let vals: Vec<u128> = [2u64, 3, 5, 7].iter().map(|&q| class_size(s, q)).collect();
        if s.regular().is_empty() {
            assert!(vals.iter().all(|&v| v == 1), "{s}: {vals:?}");
        } else {
            for w in vals.windows(2) {
                assert!(w[0] <= w[1], "{s}: {vals:?}");
                if w[0] > 0 {
                    assert!(w[0] < w[1], "{s} must grow strictly: {vals:?}");
                }
            }
            assert!(*vals.last().unwrap() > 0, "{s} never realizable: {vals:?}");
        }
    }
    pass("class sizes: formula = enumeration at (4,4), q+1 law, growth in q");
}

/// Criterion 9: the frame form of the pullback/pushout theorem, checked on
/// concrete classes: for all pointed quadruples (M, N, X, Y) with
/// Ext(M, N) = 0, total dimension <= (3,3) and dim X + dim Y = dim M + dim N
/// over F_2, the cross sequence 0 -> Y -> M+N -> X -> 0 exists iff the
/// four-edge frame does. Points are tracked explicitly because the edges
/// must agree on which regular summands share a tube.
#[test]
fn green_frame_equivalence() {
    let table = build_pointed_table(2, CAP33).expect("pointed table");
    let facts = PointedFactorizations::new(&table);
    let ctx = OracleCtx::new(2, CAP33).unwrap();
    let mut by_dim: HashMap<DimVector, Vec<PointedSymbol>> = HashMap::new();
    for s in symbols_up_to(CAP33) {
        for v in pointed_variants(&s, &ctx) {
            by_dim.entry(v.dim_vector()).or_default().push(v);
        }
    }
    let mut mn_pairs: Vec<(PointedSymbol, PointedSymbol, DimVector)> = Vec::new();
    for (dm, ms) in &by_dim {
        for (dn, ns) in &by_dim {
            let total = *dm + *dn;
            if !total.fits_in(CAP33) {
                continue;
            }
            for m in ms {
                for n in ns {
                    if pointed_ext_dim(m, n) == 0 {
                        mn_pairs.push((m.clone(), n.clone(), total));
                    }
                }
            }
        }
    }
    let count: usize = mn_pairs
        .par_iter()
        .map(|(m, n, total)| {
            let mut quads = 0usize;
            for xa in 0..=total.a {
                for xb in 0..=total.b {
                    let dx = DimVector::new(xa, xb);
                    let dy = DimVector::new(total.a - xa, total.b - xb);
                    let (Some(xs), Some(ys)) = (by_dim.get(&dx), by_dim.get(&dy)) else {
                        continue;
                    };
                    for x in xs {
                        for y in ys {
                            let (cross, frame) = green_frame_check(m, n, x, y, &table, &facts);
                            assert_eq!(
                                cross, frame,
                                "frame mismatch: M={m} N={n} X={x} Y={y} (cross={cross})"
                            );
                            quads += 1;
                        }
                    }
                }
            }
            quads
        })
        .sum();
    println!("[acceptance] green frame: {} (M,N) class pairs, {count} quadruples", mn_pairs.len());
    assert!(count > 10_000);
    pass("cross/frame equivalence under Ext(M,N) = 0, dims <= (3,3), q = 2");
}

/// Criterion 10: positivity of Hall counts equals product membership for
/// every representative and every split, total dimension <= (3,3), q = 2.
#[test]
fn hall_number_membership() {
    let ctx = OracleCtx::new(2, CAP33).unwrap();
    let symbols = symbols_up_to(CAP33);
    let by_dim: HashMap<DimVector, Vec<DecompSymbol>> = {
        let mut m: HashMap<DimVector, Vec<DecompSymbol>> = HashMap::new();
        for s in &symbols {
            m.entry(s.dim_vector()).or_default().push(s.clone());
        }
        m
    };
    let mut product_cache: HashMap<(DecompSymbol, DecompSymbol), SymbolSet> = HashMap::new();
    let mut checked = 0usize;
    let mut spot = 0usize;
    for gamma in &symbols {
        let d = gamma.dim_vector();
        for x in enumerate_class(gamma, &ctx) {
            let profile = hall_profile(&x, &ctx);
            for aa in 0..=d.a {
                for ab in 0..=d.b {
                    let da = DimVector::new(aa, ab);
                    let Some(db) = d.checked_sub(da) else { continue };
                    let (Some(alphas), Some(betas)) = (by_dim.get(&da), by_dim.get(&db)) else {
                        continue;
                    };
                    for alpha in alphas {
                        for beta in betas {
                            let positive = profile
                                .get(&(alpha.clone(), beta.clone()))
                                .copied()
                                .unwrap_or(0)
                                > 0;
                            let set = product_cache
                                .entry((alpha.clone(), beta.clone()))
                                .or_insert_with(|| product(alpha, beta));
                            let member = set.contains(gamma);
                            assert_eq!(
                                positive, member,
                                "Hall vs product: gamma={gamma} alpha={alpha} beta={beta}"
                            );
                            checked += 1;
                            // the budgeted single-pair operation agrees with
                            // the bulk profile on a sample
                            if checked % 997 == 0 {
                                let one = hall_number(&x, alpha, beta, &ctx, EnumBudget::default())
                                    .unwrap();
                                assert_eq!(
                                    one,
                                    profile
                                        .get(&(alpha.clone(), beta.clone()))
                                        .copied()
                                        .unwrap_or(0)
                                );
                                spot += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    println!("[acceptance] hall membership: {checked} triples, {spot} spot counts");
    assert!(checked > 10_000, "swept {checked} triples");
    pass("Hall positivity = product membership, dims <= (3,3), q = 2");
}
