//! Verification suites behind the CLI commands. Each suite assembles a
//! [`VerificationReport`]; failures are report entries, not process errors.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{
    bfs_closure, elementary_abelian_2_rank, group_order_formula, matrix_group_order,
    orbit_partition, perm_image, verify_presentation_gl23, DomainKind, EngineError, ExactGroup,
    Family, MatGroup, OrderCertificate, ProjectiveSpace, SimsOptions, Strategy,
};
use crate::engine::orbits::orbit_of;
use crate::ff::Field;
use crate::fmat::{self, FMat};
use crate::matrix::{Generators, MatrixR, DEFAULT_ORDER_CAP, DIM};
use crate::reduction::{IdealSign, ReduceError, ReductionContext, SplitCtx};
use crate::report::{Status, VerificationReport};

pub const DEFAULT_MAX_MEM: u64 = 2 << 30;
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModLevel {
    Quick,
    Full,
}

#[derive(Debug, Clone)]
pub struct ModOptions {
    pub level: ModLevel,
    pub seed: u64,
    pub cap: usize,
    pub max_mem: u64,
    pub domain: Option<DomainKind>,
}

impl Default for ModOptions {
    fn default() -> Self {
        ModOptions {
            level: ModLevel::Quick,
            seed: 0,
            cap: DEFAULT_CLOSURE_CAP,
            max_mem: DEFAULT_MAX_MEM,
            domain: None,
        }
    }
}

fn fmt_sizes(sizes: &[u64]) -> String {
    let mut s: Vec<u64> = sizes.to_vec();
    s.sort_unstable();
    format!(
        "{{{}}}",
        s.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
    )
}

/// The full exact-arithmetic suite over Z[1/√−2].
pub fn verify_exact(g: &Generators, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(seed);
    let ops = ExactGroup;

    for (name, m) in g.named() {
        r.check_bool(
            &format!("exact.unitary.{name}"),
            "the lifted representation is unitary",
            || {
                let prod = m * &m.adjoint();
                if prod.is_identity() {
                    (true, "m·m* = I".to_string())
                } else {
                    (false, first_bad_entry(&prod))
                }
            },
        );
        r.check_bool(
            &format!("exact.det.{name}"),
            "the image lies in SU(5, Z[1/sqrt(-2)]): determinant 1",
            || {
                let d = m.det();
                (d.is_one(), format!("det({name}) = {}", d.pretty()))
            },
        );
    }

    let expected_orders: [(&str, MatrixR, u32); 7] = [
        ("a", g.a.clone(), 4),
        ("b", g.b.clone(), 2),
        ("c", g.c.clone(), 3),
        ("d", g.d.clone(), 3),
        ("f", g.f.clone(), 5),
        ("bc", &g.b * &g.c, 8),
        ("ad", &g.a * &g.d, 2),
    ];
    for (name, m, want) in &expected_orders {
        r.check_bool(
            &format!("exact.order.{name}"),
            "element orders: a->4, b->2, c->3, d->3, f->5, bc->8, ad->2",
            || match m.element_order(DEFAULT_ORDER_CAP) {
                Ok(n) => (n == *want, format!("order({name}) = {n}, expected {want}")),
                Err(e) => (false, format!("order({name}): {e}")),
            },
        );
    }

    let bc = &g.b * &g.c;
    let z = bc.pow(4);
    r.check_bool(
        "exact.bc4.nontrivial",
        "(bc)^4 is a nontrivial element",
        || (!z.is_identity(), "(bc)^4 != I".to_string()),
    );
    r.check_bool(
        "exact.bc4.central",
        "(bc)^4 commutes with both b and c",
        || {
            let with_b = &g.b * &z == &z * &g.b;
            let with_c = &g.c * &z == &z * &g.c;
            (
                with_b && with_c,
                format!("[b,(bc)^4]=1: {with_b}, [c,(bc)^4]=1: {with_c}"),
            )
        },
    );

    r.check_bool(
        "exact.a_word_in_bc",
        "a lies in <b,c> as a word in b and c",
        || {
            let cbc = &(&g.c * &g.b) * &g.c;
            let ci = g.c.unitary_inverse();
            let printed = (&(&ci * &g.b) * &ci).pow(2);
            let direct = cbc.pow(2) == g.a;
            let inverse_form = printed == g.a.pow(3);
            (
                direct && inverse_form,
                format!(
                    "a = (cbc)^2: {direct}; the printed word gives the inverse, \
                     (c^-1 b c^-1)^2 = a^-1: {inverse_form}"
                ),
            )
        },
    );

    let d8 = bfs_closure(&ops, &[g.a.clone(), g.b.clone()], &["a", "b"], crate::engine::DEFAULT_EXACT_CAP);
    let s4 = bfs_closure(
        &ops,
        &[g.a.clone(), g.b.clone(), g.d.clone()],
        &["a", "b", "d"],
        crate::engine::DEFAULT_EXACT_CAP,
    );
    let h = bfs_closure(&ops, &[g.b.clone(), g.c.clone()], &["b", "c"], crate::engine::DEFAULT_EXACT_CAP);
    for (id, claim, want, closure) in [
        ("exact.closure.d8", "<a,b> is dihedral of order 8", 8usize, &d8),
        ("exact.closure.s4", "K = <a,b,d> is S4, order 24", 24, &s4),
        ("exact.closure.gl23", "H = <b,c> is GL(2,3), order 48", 48, &h),
    ] {
        r.check_bool(id, claim, || match closure {
            Ok(c) => (c.len() == want, format!("|closure| = {}", c.len())),
            Err(e) => (false, format!("{e}")),
        });
    }

    r.check_bool("exact.d_not_in_h", "K is not contained in H", || match &h {
        Ok(h) => (!h.contains(&g.d), format!("d in H: {}", h.contains(&g.d))),
        Err(e) => (false, format!("{e}")),
    });

    r.check_bool("exact.h_cap_k", "H ∩ K = <a,b>, of order 8", || {
        match (&h, &s4, &d8) {
            (Ok(h), Ok(k), Ok(d8)) => {
                let inter = h.intersection(k);
                let same_set = inter.len() == d8.len()
                    && d8.elements.iter().all(|m| inter.contains(m));
                (
                    inter.len() == 8 && same_set,
                    format!("|H ∩ K| = {}, equals <a,b>: {same_set}", inter.len()),
                )
            }
            _ => (false, "closure failed".to_string()),
        }
    });

    let pres = verify_presentation_gl23(&g.b, &g.c);
    for rel in &pres.relations {
        r.check_bool(
            &format!("exact.rel.{}", rel.name.replace(['(', ')', '[', ']', ','], "").replace('^', "")),
            "presentation: b^2 = c^3 = (bc)^8 = [b,(bc)^4] = [c,(bc)^4] = 1",
            || (rel.holds, format!("relation {} holds: {}", rel.name, rel.holds)),
        );
    }
    r.check_bool(
        "exact.presentation.order48",
        "the presented group is the full double cover of S4, order 48",
        || {
            (
                pres.closure_order == Some(48),
                format!(
                    "|<b,c>| = {}",
                    pres.closure_order
                        .map(|n| n.to_string())
                        .unwrap_or_else(|| "cap exceeded".to_string())
                ),
            )
        },
    );
    r.check_bool(
        "exact.presentation.cover",
        "the cover in which a transposition preimage has order 2",
        || {
            (
                pres.cover_witness.is_some(),
                pres.cover_witness.clone().unwrap_or_else(|| "no witness".to_string()),
            )
        },
    );

    r.check_bool(
        "exact.spectrum.bc",
        "eigenvalues of bc do not occur in mutually inverse pairs",
        || match bc.char_poly().is_self_reciprocal() {
            Ok(v) => (!v, format!("is_self_reciprocal(char_poly(bc)) = {v}")),
            Err(e) => (false, format!("{e}")),
        },
    );

    r
}

fn first_bad_entry(prod: &MatrixR) -> String {
    for i in 0..DIM {
        for j in 0..DIM {
            let want_one = i == j;
            let e = prod.entry(i, j);
            if (want_one && !e.is_one()) || (!want_one && !e.is_zero()) {
                return format!("entry ({i},{j}) of m·m* is {}", e.pretty());
            }
        }
    }
    "unexpected".to_string()
}

/// Spectrum checks for bc (its order, and the non-self-reciprocal char poly).
pub fn spectrum_suite(g: &Generators) -> VerificationReport {
    let mut r = VerificationReport::new(0);
    let bc = &g.b * &g.c;
    r.check_bool("spectrum.bc8", "bc has order 8", || {
        (
            bc.pow(8).is_identity() && !bc.pow(4).is_identity(),
            format!(
                "(bc)^8 = I: {}, (bc)^4 = I: {}",
                bc.pow(8).is_identity(),
                bc.pow(4).is_identity()
            ),
        )
    });
    let cp = bc.char_poly();
    r.check_bool(
        "spectrum.charpoly",
        "char poly of bc: constant term -1, irrational quadratic factor",
        || {
            let const_ok = !cp.coeff(0).is_one() && (-cp.coeff(0)).is_one();
            let irrational = !cp.coeff(4).is_rational();
            (
                const_ok && irrational,
                format!("char_poly(bc) = {}", cp.pretty()),
            )
        },
    );
    r.check_bool(
        "spectrum.not_self_reciprocal",
        "eigenvalues of bc, other than -1, do not occur in mutually inverse pairs",
        || match cp.is_self_reciprocal() {
            Ok(v) => (!v, format!("is_self_reciprocal = {v}")),
            Err(e) => (false, format!("{e}")),
        },
    );
    r
}

fn random_word(g: &Generators, rng: &mut impl Rng) -> MatrixR {
    let gens = [&g.a, &g.b, &g.c, &g.d];
    let len = rng.gen_range(1..=5);
    let mut m = MatrixR::identity();
    for _ in 0..len {
        m = &m * gens[rng.gen_range(0..gens.len())];
    }
    m
}

struct ReducedGens<E> {
    a: FMat<E>,
    b: FMat<E>,
    c: FMat<E>,
    d: FMat<E>,
    f: FMat<E>,
}

impl<E: Copy> ReducedGens<E> {
    fn group(&self) -> [FMat<E>; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

fn reduce_all<F: Field>(f: &F, omega: F::Elem, g: &Generators) -> ReducedGens<F::Elem> {
    ReducedGens {
        a: crate::reduction::reduce_matrix(f, omega, &g.a),
        b: crate::reduction::reduce_matrix(f, omega, &g.b),
        c: crate::reduction::reduce_matrix(f, omega, &g.c),
        d: crate::reduction::reduce_matrix(f, omega, &g.d),
        f: crate::reduction::reduce_matrix(f, omega, &g.f),
    }
}

/// Quick-level checks shared by the split and inert arms.
fn quick_checks<F: Field>(
    r: &mut VerificationReport,
    field: &F,
    omega: F::Elem,
    g: &Generators,
    seed: u64,
    cap: usize,
) {
    let red = reduce_all(field, omega, g);

    r.check_bool(
        "mod.homomorphism",
        "reduction mod a prime ideal is a ring homomorphism",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let id_ok =
                crate::reduction::reduce_matrix(field, omega, &MatrixR::identity()) == fmat::identity(field);
            for i in 0..20 {
                let u = random_word(g, &mut rng);
                let v = random_word(g, &mut rng);
                let lhs = crate::reduction::reduce_matrix(field, omega, &(&u * &v));
                let rhs = fmat::mul(
                    field,
                    &crate::reduction::reduce_matrix(field, omega, &u),
                    &crate::reduction::reduce_matrix(field, omega, &v),
                );
                if lhs != rhs {
                    return (false, format!("word pair #{i}: reduce(uv) != reduce(u)reduce(v)"));
                }
            }
            (id_ok, "20 random word pairs + identity".to_string())
        },
    );

    let ops = MatGroup::new(field.clone());
    r.check_bool(
        "mod.injective.h",
        "GL(2,3) embeds in the reduction (image has 48 elements)",
        || match bfs_closure(&ops, &[red.b, red.c], &["b", "c"], cap) {
            Ok(cl) => (cl.len() == 48, format!("|<b,c> mod p| = {}", cl.len())),
            Err(e) => (false, format!("{e}")),
        },
    );
    r.check_bool(
        "mod.injective.k",
        "S4 embeds in the reduction (image has 24 elements)",
        || match bfs_closure(&ops, &[red.a, red.b, red.d], &["a", "b", "d"], cap) {
            Ok(cl) => (cl.len() == 24, format!("|<a,b,d> mod p| = {}", cl.len())),
            Err(e) => (false, format!("{e}")),
        },
    );

    r.check_bool(
        "mod.det_one",
        "every reduced generator has determinant 1",
        || {
            for (name, m) in [("a", &red.a), ("b", &red.b), ("c", &red.c), ("d", &red.d), ("f", &red.f)] {
                if fmat::det(field, m) != field.one() {
                    return (false, format!("det(reduce({name})) != 1"));
                }
            }
            (true, "a, b, c, d, f".to_string())
        },
    );

    r.check_bool(
        "mod.det_compat",
        "det commutes with reduction on the generators",
        || {
            for (name, exact, reduced) in [
                ("a", &g.a, &red.a),
                ("b", &g.b, &red.b),
                ("c", &g.c, &red.c),
                ("d", &g.d, &red.d),
                ("f", &g.f, &red.f),
            ] {
                let lhs = fmat::det(field, reduced);
                let rhs = crate::reduction::reduce_elem(field, omega, &exact.det());
                if lhs != rhs {
                    return (false, format!("det(reduce({name})) != reduce(det({name}))"));
                }
            }
            (true, "a, b, c, d, f".to_string())
        },
    );
}

fn estimated_orbit_bytes(domain_size: u128) -> u128 {
    domain_size * 40 * 3
}

fn auto_domain(q: u64, max_mem: u64) -> Option<DomainKind> {
    let q = q as u128;
    let vec_size = q.checked_pow(DIM as u32);
    if let Some(s) = vec_size {
        if estimated_orbit_bytes(s) <= max_mem as u128 {
            return Some(DomainKind::Vectors);
        }
    }
    let proj_size: Option<u128> = (0..DIM as u32).try_fold(0u128, |acc, i| {
        q.checked_pow(i).and_then(|v| acc.checked_add(v))
    });
    if let Some(s) = proj_size {
        if estimated_orbit_bytes(s) <= max_mem as u128 {
            return Some(DomainKind::Projective);
        }
    }
    None
}

/// Size of the scalar subgroup of SL(5,p) (split) or SU(5,p) (inert):
/// gcd(5, p−1) resp. gcd(5, p+1). The projective-domain order certificate is
/// only unambiguous when this is 1.
fn scalar_subgroup_order(p: u64, family: Family) -> u64 {
    let m = match family {
        Family::Sl => p - 1,
        Family::Su => p + 1,
    };
    if m % 5 == 0 {
        5
    } else {
        1
    }
}

fn order_certification<F: Field>(
    r: &mut VerificationReport,
    field: &F,
    gens: &[FMat<F::Elem>],
    family: Family,
    p: u64,
    claim: &str,
    opts: &ModOptions,
) {
    let target = group_order_formula(family, DIM as u32, p).expect("odd prime");
    r.check_bool("mod.target", "certification target from the order formula", || {
        (true, target.describe())
    });

    let domain = match opts.domain.or_else(|| auto_domain(field.q(), opts.max_mem)) {
        Some(d) => d,
        None => {
            r.check("mod.order", claim, || {
                (
                    Status::Inconclusive,
                    format!(
                        "both vector and projective domains exceed the {}-byte memory budget",
                        opts.max_mem
                    ),
                )
            });
            return;
        }
    };

    if domain == DomainKind::Projective {
        let kernel = scalar_subgroup_order(p, family);
        r.check("mod.scalar_kernel", "scalar kernel of the projective action", || {
            if kernel == 1 {
                (
                    Status::Pass,
                    format!(
                        "scalars in {}(5,{}) are trivial (gcd(5, p{}1) = 1); projective order = matrix order",
                        family.label(),
                        p,
                        if family == Family::Su { "+" } else { "-" }
                    ),
                )
            } else {
                (
                    Status::Inconclusive,
                    format!("scalar subgroup has order {kernel}; projective certificate ambiguous"),
                )
            }
        });
        if kernel != 1 {
            r.check("mod.order", claim, || {
                (
                    Status::Inconclusive,
                    "projective domain cannot separate scalars for this prime".to_string(),
                )
            });
            return;
        }
    }

    let sims = SimsOptions {
        domain,
        strategy: Strategy::Auto,
        target: Some(target.value.clone()),
        seed: opts.seed,
        max_mem: opts.max_mem,
        ..SimsOptions::default()
    };
    r.check("mod.order", claim, || match matrix_group_order(field, gens, &sims) {
        Ok(res) => {
            let summary = res.chain.summary();
            let cert = match &res.certificate {
                OrderCertificate::DeterministicComplete => "deterministic completion".to_string(),
                OrderCertificate::TargetDivisibility { .. } => {
                    "divisibility squeeze against the target".to_string()
                }
            };
            let witness = format!(
                "order = {} ({}; domain {}, base {:?}, orbits {:?}, {} strong gens)",
                res.order,
                cert,
                summary.domain,
                summary.base,
                summary.orbit_lengths,
                summary.strong_gen_count
            );
            if res.order == target.value {
                (Status::Pass, witness)
            } else {
                (Status::Fail, format!("{witness}; expected {}", target.value))
            }
        }
        Err(EngineError::Inconclusive { lower_bound, reason }) => (
            Status::Inconclusive,
            format!("stalled at proven lower bound {lower_bound}: {reason}"),
        ),
        Err(EngineError::DomainTooLarge { needed, budget }) => (
            Status::Inconclusive,
            format!("domain needs ~{needed} bytes, budget {budget}"),
        ),
        Err(e) => (Status::Fail, format!("{e}")),
    });
}

/// The p = 3 full-level block: orbit structure, the M11 certificate on the
/// (1+√−2) side, the duality certificate on the conjugate side, and the
/// elementary-abelian facts.
fn full_p3(r: &mut VerificationReport, ctx: &SplitCtx, g: &Generators, opts: &ModOptions) {
    let field = ctx.field;
    let red = reduce_all(&field, ctx.omega, g);
    let gens = red.group();
    let space = ProjectiveSpace::new(field);

    let sims = SimsOptions {
        seed: opts.seed,
        max_mem: opts.max_mem,
        ..SimsOptions::default()
    };
    r.check_bool("mod.order", "Theorem 1(i): L_3 has order 7920 (= |M11|)", || {
        match matrix_group_order(&field, &gens, &sims) {
            Ok(res) => (
                res.order == BigUint::from(7920u32),
                format!("order = {} by deterministic stabilizer chain", res.order),
            ),
            Err(e) => (false, format!("{e}")),
        }
    });

    let sizes = orbit_partition(&space, &gens, 1 << 24).expect("121 points");
    let is_paper_ideal = ctx.sign == IdealSign::Minus;
    if is_paper_ideal {
        r.check_bool(
            "mod.orbits",
            "mod (1+sqrt(-2)): one orbit of length 11 on the projective points, the other of length 110",
            || {
                let mut s = sizes.clone();
                s.sort_unstable();
                (s == vec![11, 110], format!("orbit sizes {}", fmt_sizes(&sizes)))
            },
        );
        // the degree-11 image and its sharp 4-transitivity certificate
        let eleven_start = {
            let mut start = None;
            let mut seen: Vec<u64> = Vec::new();
            for idx in 0..space.point_count() {
                if seen.contains(&idx) {
                    continue;
                }
                let orb = orbit_of(&space, &gens, idx);
                if orb.len() == 11 {
                    start = Some(orb);
                    break;
                }
                seen.extend_from_slice(&orb);
            }
            start
        };
        match eleven_start {
            Some(orbit11) => {
                match perm_image(&space, &gens, &orbit11) {
                    Ok(img) => {
                        r.check_bool(
                            "mod.m11.degree11_order",
                            "the permutation group on the 11 subspaces is M11 (order 7920)",
                            || {
                                let o = img.order();
                                (o == BigUint::from(7920u32), format!("degree-11 image order = {o}"))
                            },
                        );
                        r.check_bool(
                            "mod.m11.tower",
                            "sharply 4-transitive: tower [11,10,9,8] with trivial final stabilizer",
                            || {
                                let tower = img.transitivity_tower();
                                let product: BigUint =
                                    tower.iter().map(|&n| BigUint::from(n)).product();
                                let trivial_final = product == img.order();
                                (
                                    tower == vec![11, 10, 9, 8] && trivial_final,
                                    format!("tower {tower:?}, product equals order: {trivial_final}"),
                                )
                            },
                        );
                    }
                    Err(e) => {
                        r.check("mod.m11.degree11_order", "degree-11 image", move || {
                            (Status::Fail, format!("{e}"))
                        });
                    }
                }
                // the same group acts faithfully on the other orbit
                let orbit110: Vec<u64> = (0..space.point_count())
                    .filter(|i| !orbit11.contains(i))
                    .collect();
                r.check_bool(
                    "mod.m11.degree110_order",
                    "the action on the length-110 orbit is faithful (order 7920)",
                    || match perm_image(&space, &gens, &orbit110) {
                        Ok(img) => {
                            let o = img.order();
                            (o == BigUint::from(7920u32), format!("degree-110 image order = {o}"))
                        }
                        Err(e) => (false, format!("{e}")),
                    },
                );
            }
            None => {
                r.check("mod.m11.degree11_order", "degree-11 image", || {
                    (Status::Fail, "no orbit of length 11 found".to_string())
                });
            }
        }
    } else {
        r.check_bool(
            "mod.orbits",
            "the conjugate ideal carries the dual module: orbits of length 55 and 66",
            || {
                let mut s = sizes.clone();
                s.sort_unstable();
                (s == vec![55, 66], format!("orbit sizes {}", fmt_sizes(&sizes)))
            },
        );
    }

    // duality: this reduction is entrywise-conjugate to the other one, which is
    // exactly the contragredient (inverse-transpose) in the same basis
    let other = match ReductionContext::new(3, match ctx.sign {
        IdealSign::Plus => IdealSign::Minus,
        IdealSign::Minus => IdealSign::Plus,
    }) {
        Ok(ReductionContext::Split(s)) => s,
        _ => unreachable!("p = 3 splits"),
    };
    r.check_bool(
        "mod.duality",
        "the two prime ideals over 3 give mutually dual representations",
        || {
            for (name, m) in g.named() {
                let this_side = ctx.reduce(m);
                let other_side = other.reduce(m);
                let contragredient = fmat::transpose(
                    &fmat::inverse(&field, &other_side).expect("group element invertible"),
                );
                if this_side != contragredient {
                    return (false, format!("generator {name}: not the contragredient"));
                }
            }
            (true, "reduce_this(g) = (reduce_other(g)^-1)^T for g = a,b,c,d,f".to_string())
        },
    );

    // elementary abelian structure of L_3 and of <b,f> mod 3
    let ops = MatGroup::new(field);
    r.check_bool(
        "mod.ea_rank.l3",
        "L_3 contains no elementary abelian subgroup of order 8",
        || match bfs_closure(&ops, &gens, &["a", "b", "c", "d"], opts.cap.max(8000)) {
            Ok(cl) => {
                let rank = elementary_abelian_2_rank(&ops, &cl);
                (rank == 2, format!("|L_3| = {}, 2-rank = {rank}", cl.len()))
            }
            Err(e) => (false, format!("{e}")),
        },
    );
    r.check_bool(
        "mod.bf.closure",
        "<b,f> mod 3 has order 80 and an elementary abelian subgroup of order 16",
        || match bfs_closure(&ops, &[red.b, red.f], &["b", "f"], opts.cap) {
            Ok(cl) => {
                let rank = elementary_abelian_2_rank(&ops, &cl);
                (
                    cl.len() == 80 && rank == 4,
                    format!("|<b,f>| = {}, 2-rank = {rank}", cl.len()),
                )
            }
            Err(e) => (false, format!("{e}")),
        },
    );
}

/// The mod-p verification suite.
pub fn verify_mod(p: u64, sign: IdealSign, opts: &ModOptions) -> Result<VerificationReport, ReduceError> {
    let g = crate::matrix::builtin_generators();
    verify_mod_with(&g, p, sign, opts)
}

pub fn verify_mod_with(
    g: &Generators,
    p: u64,
    sign: IdealSign,
    opts: &ModOptions,
) -> Result<VerificationReport, ReduceError> {
    let ctx = ReductionContext::new(p, sign)?;
    let mut r = VerificationReport::new(opts.seed);

    r.check_bool(
        "mod.context",
        "odd p splits when p = 1,3 (mod 8) and is inert when p = 5,7 (mod 8)",
        || {
            let class_split = p % 8 == 1 || p % 8 == 3;
            (
                ctx.is_split() == class_split,
                format!("{} (p mod 8 = {})", ctx.describe(), p % 8),
            )
        },
    );

    match &ctx {
        ReductionContext::Split(s) => {
            quick_checks(&mut r, &s.field, s.omega, g, opts.seed, opts.cap);
            if opts.level == ModLevel::Full {
                if p == 3 {
                    full_p3(&mut r, s, g, opts);
                } else {
                    let red = reduce_all(&s.field, s.omega, g);
                    order_certification(
                        &mut r,
                        &s.field,
                        &red.group(),
                        Family::Sl,
                        p,
                        "Theorem 1(ii): L_p = SL(5,p) for p > 3, p = 1,3 (mod 8)",
                        opts,
                    );
                }
            }
        }
        ReductionContext::Inert(ictx) => {
            let t = ictx.field.t();
            quick_checks(&mut r, &ictx.field, t, g, opts.seed, opts.cap);
            let red = reduce_all(&ictx.field, t, g);
            r.check_bool(
                "mod.su_form",
                "L_p preserves the standard Hermitian form when p = 5,7 (mod 8)",
                || {
                    for (name, m) in [("a", &red.a), ("b", &red.b), ("c", &red.c), ("d", &red.d), ("f", &red.f)] {
                        if !ictx.check_unitary_form(m) {
                            return (false, format!("reduce({name}) fails g*·g = I"));
                        }
                    }
                    (true, "g*·g = I for a, b, c, d, f".to_string())
                },
            );
            if opts.level == ModLevel::Full {
                order_certification(
                    &mut r,
                    &ictx.field,
                    &red.group(),
                    Family::Su,
                    p,
                    "Theorem 1(iii): L_p = SU(5,p) for p = 5,7 (mod 8)",
                    opts,
                );
            }
        }
    }
    Ok(r)
}

/// Orbit partition of the projective points under the reduced generators.
pub fn orbits_suite(p: u64, sign: IdealSign, max_mem: u64) -> Result<VerificationReport, ReduceError> {
    let g = crate::matrix::builtin_generators();
    let ctx = ReductionContext::new(p, sign)?;
    let mut r = VerificationReport::new(0);
    let max_points = (max_mem / 8).max(1);

    fn run<F: Field>(
        r: &mut VerificationReport,
        field: &F,
        omega: F::Elem,
        g: &Generators,
        max_points: u64,
        describe: String,
    ) {
        let red = reduce_all(field, omega, g);
        let space = ProjectiveSpace::new(field.clone());
        match orbit_partition(&space, &red.group(), max_points) {
            Ok(sizes) => {
                let total: u64 = sizes.iter().sum();
                r.check_bool(
                    "orbits.partition",
                    "orbit lengths of L_p on the projective points",
                    || (true, format!("{describe}: sizes {}", fmt_sizes(&sizes))),
                );
                r.check_bool("orbits.sum", "orbit sizes add up to (q^5-1)/(q-1)", || {
                    (
                        total == space.point_count(),
                        format!("{total} of {} points", space.point_count()),
                    )
                });
            }
            Err(e) => {
                r.check("orbits.partition", "orbit lengths of L_p", move || {
                    (Status::Inconclusive, format!("{e}"))
                });
            }
        }
    }

    match &ctx {
        ReductionContext::Split(s) => run(&mut r, &s.field, s.omega, &g, max_points, ctx.describe()),
        ReductionContext::Inert(i) => run(&mut r, &i.field, i.field.t(), &g, max_points, ctx.describe()),
    }
    Ok(r)
}

/// Order computation with the certification target picked from the prime class.
pub fn order_suite(p: u64, sign: IdealSign, opts: &ModOptions) -> Result<VerificationReport, ReduceError> {
    let g = crate::matrix::builtin_generators();
    let ctx = ReductionContext::new(p, sign)?;
    let mut r = VerificationReport::new(opts.seed);

    match &ctx {
        ReductionContext::Split(s) => {
            let red = reduce_all(&s.field, s.omega, &g);
            if p == 3 {
                let sims = SimsOptions {
                    seed: opts.seed,
                    max_mem: opts.max_mem,
                    domain: opts.domain.unwrap_or(DomainKind::Vectors),
                    ..SimsOptions::default()
                };
                r.check_bool("order.value", "Theorem 1(i): |L_3| = 7920", || {
                    match matrix_group_order(&s.field, &red.group(), &sims) {
                        Ok(res) => (
                            res.order == BigUint::from(7920u32),
                            format!("order = {}", res.order),
                        ),
                        Err(e) => (false, format!("{e}")),
                    }
                });
            } else {
                order_certification(
                    &mut r,
                    &s.field,
                    &red.group(),
                    Family::Sl,
                    p,
                    "Theorem 1(ii): L_p = SL(5,p) for p > 3, p = 1,3 (mod 8)",
                    opts,
                );
            }
        }
        ReductionContext::Inert(i) => {
            let red = reduce_all(&i.field, i.field.t(), &g);
            order_certification(
                &mut r,
                &i.field,
                &red.group(),
                Family::Su,
                p,
                "Theorem 1(iii): L_p = SU(5,p) for p = 5,7 (mod 8)",
                opts,
            );
        }
    }
    Ok(r)
}
