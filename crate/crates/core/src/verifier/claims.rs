use crate::epg::EpgBundle;
use crate::graph::{
    chromatic_number, clique_number, connected_components, cyclomatic_number, girth, is_bipartite, is_eulerian,
    Bipartiteness, Girth, SimpleGraph,
};
use crate::group::selector::parse_selector;
use crate::group::{make_dicyclic, make_dihedral, GroupTable, EXHAUSTIVE_CATALOG_LIMIT};
use crate::topology::{classify_surface_with_budget, SurfaceVerdict};

use super::{GroupCheck, Status, TheoremReport, Verifier};

fn labels(g: &GroupTable, xs: &[usize]) -> String {
    let names: Vec<&str> = xs.iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn tags(g: &SimpleGraph, vs: &[usize]) -> String {
    let names: Vec<String> = vs.iter().map(|&v| g.tag(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn subgroup_listing(b: &EpgBundle) -> String {
    let parts: Vec<String> = b.family.subgroups.iter().map(|m| labels(&b.group, m)).collect();
    format!("maximal cyclic subgroups of {}: {}", b.name(), parts.join(" "))
}

fn profile(count: usize, sizes: &[usize]) -> String {
    format!("{count}; {sizes:?}")
}

fn cyclic_vacuous(b: &EpgBundle) -> GroupCheck {
    GroupCheck::vacuous(b.name(), "cyclic group: complement is edgeless")
}

fn error_check(group: &str, expected: String, e: impl std::fmt::Display) -> GroupCheck {
    GroupCheck::new(group, false, "error".into(), expected).witness(e.to_string())
}

impl Verifier {
    /// Number and sizes of maximal cyclic subgroups against the fixture
    /// table, for every catalog group of order at most 15.
    pub fn maximal_cyclic_table(&self) -> TheoremReport {
        let fx = &self.fixtures;
        let bundles: Vec<&EpgBundle> = self.exhaustive().collect();
        let mut checks = self.per_group(bundles.clone(), |b| {
            let observed = profile(b.family.len(), &b.family.size_profile());
            match fx.maximal_cyclic_row(b.name()) {
                None => GroupCheck::new(b.name(), false, observed, "a fixture row".into())
                    .witness(format!("{} has no fixture row", b.name())),
                Some(row) => {
                    let mut sizes = row.sizes.clone();
                    sizes.sort_unstable_by(|a, b| b.cmp(a));
                    let ok = b.family.len() == row.count && b.family.size_profile() == sizes;
                    GroupCheck::new(b.name(), ok, observed, profile(row.count, &sizes))
                        .witness_on_fail(|| subgroup_listing(b))
                }
            }
        });
        let limit = self.max_order.min(EXHAUSTIVE_CATALOG_LIMIT);
        for row in &fx.maximal_cyclic {
            let expected = profile(row.count, &row.sizes);
            match parse_selector(&row.group) {
                Err(e) => checks.push(error_check(&row.group, expected, e)),
                Ok(g) if g.order() <= limit && !bundles.iter().any(|b| b.name() == row.group) => {
                    checks.push(
                        GroupCheck::new(&row.group, false, "absent".into(), expected)
                            .witness(format!("{} is missing from the catalog", row.group)),
                    );
                }
                Ok(_) => {}
            }
        }
        TheoremReport::assemble("table-maximal-cyclic", fx, checks)
    }

    pub fn no_two_maximal(&self) -> TheoremReport {
        let forbidden = self.fixtures.no_two_maximal.forbidden_count;
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            let k = b.family.len();
            GroupCheck::new(b.name(), k != forbidden, format!("|M| = {k}"), format!("|M| != {forbidden}"))
                .witness_on_fail(|| subgroup_listing(b))
        });
        TheoremReport::assemble("no-two-maximal", &self.fixtures, checks)
    }

    pub fn one_component(&self) -> TheoremReport {
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            if b.group.is_cyclic() {
                return cyclic_vacuous(b);
            }
            let comps = connected_components(&b.complement);
            let big: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() > 1).collect();
            let sizes: Vec<usize> = big.iter().map(|c| c.len()).collect();
            let isolated = comps.len() - big.len();
            GroupCheck::new(
                b.name(),
                big.len() == 1,
                format!("components of size >= 2: {sizes:?}; isolated: {isolated}"),
                "one component of size >= 2".into(),
            )
            .witness_on_fail(|| {
                let parts: Vec<String> = big.iter().map(|c| labels(&b.group, c)).collect();
                format!("components of the complement of {}: {}", b.name(), parts.join(" "))
            })
        });
        TheoremReport::assemble("one-component", &self.fixtures, checks)
    }

    pub fn bipartite_girth_perfect(&self) -> TheoremReport {
        let want_girth = self.fixtures.bipartite_girth_perfect.noncyclic_girth;
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            let g = &b.complement;
            let cyclic = b.group.is_cyclic();
            let k = b.family.len();
            let bip = is_bipartite(g);
            let gi = girth(g);
            let mut observed = format!("bipartite={}, girth={gi}", bip.is_bipartite());
            let expected = if cyclic {
                "bipartite=true, girth=inf".to_string()
            } else {
                format!("bipartite=false, girth={want_girth}, omega={k}, chi={k}")
            };
            let mut witness = Vec::new();
            let mut ok = bip.is_bipartite() == cyclic;
            if !ok {
                witness.push(match &bip {
                    Bipartiteness::OddCycle(c) => format!("odd cycle {}", labels(&b.group, c)),
                    Bipartiteness::Bipartite { .. } => format!("{} is non-cyclic with a bipartite complement", b.name()),
                });
            }
            let girth_ok = if cyclic { gi == Girth::Infinite } else { gi == Girth::Finite(want_girth) };
            if !girth_ok {
                witness.push(format!("girth {gi}"));
            }
            ok &= girth_ok;
            if !cyclic {
                let omega = match clique_number(g) {
                    Ok(c) => c,
                    Err(e) => return error_check(b.name(), expected, e),
                };
                let chi = match chromatic_number(g, Some(&b.partition_by_maximal_cyclic())) {
                    Ok(c) => c,
                    Err(e) => return error_check(b.name(), expected, e),
                };
                observed.push_str(&format!(", omega={}, chi={}", omega.size, chi.count));
                if omega.size != k || chi.count != k {
                    ok = false;
                    witness.push(format!(
                        "maximum clique {} and a colouring with {} colours",
                        labels(&b.group, &omega.vertices),
                        chi.count
                    ));
                }
            }
            let check = GroupCheck::new(b.name(), ok, observed, expected);
            if ok {
                check
            } else {
                check.witness(format!("complement of {}: {}", b.name(), witness.join("; ")))
            }
        });
        TheoremReport::assemble("bipartite-girth-perfect", &self.fixtures, checks)
    }

    pub fn dominating_complete(&self) -> TheoremReport {
        let m = self.fixtures.dominating_complete.dominating_subgroup_order;
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            if b.group.is_cyclic() {
                return cyclic_vacuous(b);
            }
            let r = &b.reduced;
            let dom = r.dominating_vertex();
            let has_m = b.family.sizes.contains(&m);
            let complete = r.is_complete();
            let elementary = b.group.is_elementary_abelian_2();
            let observed = format!("dominating={}, complete={complete}", dom.is_some());
            let expected = format!("dominating={has_m}, complete={elementary}");
            let ok = dom.is_some() == has_m && complete == elementary;
            GroupCheck::new(b.name(), ok, observed, expected).witness_on_fail(|| {
                let mut w = Vec::new();
                if let Some(v) = dom {
                    w.push(format!("{} dominates the reduced graph", r.tag(v)));
                } else if has_m {
                    let i = b.family.sizes.iter().position(|&s| s == m).expect("has_m");
                    w.push(format!(
                        "maximal cyclic subgroup {} of order {m} but no dominating vertex",
                        labels(&b.group, &b.family.subgroups[i])
                    ));
                }
                if complete != elementary {
                    w.push(format!("reduced graph complete={complete} on {} vertices", r.vertex_count()));
                }
                format!("reduced complement of {}: {}", b.name(), w.join("; "))
            })
        });
        TheoremReport::assemble("dominating-complete", &self.fixtures, checks)
    }

    pub fn eulerian(&self) -> TheoremReport {
        let sweep = &self.fixtures.eulerian;
        let mut checks = self.per_group(self.bundles.iter().collect(), |b| {
            if b.group.is_cyclic() {
                return cyclic_vacuous(b);
            }
            let n = b.group.order();
            let odd_union = b.group.elements().find(|&x| b.family.union_containing(x).len() % 2 == 1);
            let criterion = n % 2 == 1 || odd_union.is_none();
            let eul = is_eulerian(&b.reduced, false);
            GroupCheck::new(b.name(), eul == criterion, format!("eulerian={eul}"), format!("eulerian={criterion}"))
                .witness_on_fail(|| {
                    let odd: Vec<usize> = (0..b.reduced.vertex_count()).filter(|&v| b.reduced.degree(v) % 2 == 1).collect();
                    format!(
                        "reduced complement of {}: odd-degree vertices {}; element with odd |M_x|: {}",
                        b.name(),
                        tags(&b.reduced, &odd),
                        odd_union.map_or("none".into(), |x| b.group.label(x).to_string())
                    )
                })
        });

        let family = |n: usize, make: fn(usize) -> crate::group::Result<GroupTable>, expect: bool, what: &str| {
            match make(n) {
                Err(e) => error_check(&format!("{what} n={n}"), format!("eulerian={expect}"), e),
                Ok(g) => {
                    let b = EpgBundle::build(g);
                    let eul = is_eulerian(&b.reduced, false);
                    GroupCheck::new(b.name(), eul == expect, format!("{what} n={n}: eulerian={eul}"), format!("eulerian={expect}"))
                        .witness_on_fail(|| format!("reduced complement of {} has degrees {:?}", b.name(), b.reduced.degrees()))
                }
            }
        };
        let [lo, hi] = sweep.dihedral_n;
        checks.extend((lo..=hi).map(|n| family(n, make_dihedral, n % 2 == 0, "dihedral")));
        let [lo, hi] = sweep.dicyclic_n;
        checks.extend((lo..=hi).map(|n| family(n, make_dicyclic, true, "dicyclic")));

        for b in self.bundles.iter().filter(|b| b.group.is_2_group() && !b.group.is_cyclic()) {
            let eul = is_eulerian(&b.reduced, false);
            checks.push(
                GroupCheck::new(b.name(), eul, format!("2-group: eulerian={eul}"), "eulerian=true".into())
                    .witness_on_fail(|| format!("reduced complement of {} has degrees {:?}", b.name(), b.reduced.degrees())),
            );
        }
        TheoremReport::assemble("eulerian", &self.fixtures, checks)
    }

    pub fn c_cyclic(&self) -> TheoremReport {
        let fx = &self.fixtures.c_cyclic;
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            if b.group.is_cyclic() {
                return cyclic_vacuous(b);
            }
            let name = b.name().to_string();
            let expected = if fx.unicyclic.contains(&name) {
                "c = 1".to_string()
            } else if fx.pentacyclic.contains(&name) {
                "c = 5".to_string()
            } else {
                format!("c not in {:?}, c != 1, c != 5", fx.forbidden)
            };
            let c = match cyclomatic_number(&b.reduced) {
                Ok(c) => c,
                Err(e) => return error_check(&name, expected, e),
            };
            let ok = (c == 1) == fx.unicyclic.contains(&name)
                && (c == 5) == fx.pentacyclic.contains(&name)
                && !fx.forbidden.contains(&c);
            GroupCheck::new(&name, ok, format!("c = {c}"), expected).witness_on_fail(|| {
                format!(
                    "reduced complement of {name}: {} edges, {} vertices",
                    b.reduced.edge_count(),
                    b.reduced.vertex_count()
                )
            })
        });
        TheoremReport::assemble("c-cyclic", &self.fixtures, checks)
    }

    pub fn surface_classification(&self) -> TheoremReport {
        let checks = self.per_group(self.bundles.iter().collect(), |b| {
            if b.group.is_cyclic() {
                return cyclic_vacuous(b);
            }
            match classify_surface_with_budget(b, self.budget) {
                Ok(v) => self.surface_check(b, &v),
                Err(e) => error_check(b.name(), "a surface verdict".into(), e),
            }
        });
        TheoremReport::assemble("surface-classification", &self.fixtures, checks)
    }

    fn surface_check(&self, b: &EpgBundle, v: &SurfaceVerdict) -> GroupCheck {
        let sets = &self.fixtures.surface;
        let name = b.name().to_string();
        let in_set = |s: &[String]| s.contains(&name);
        let (outer, planar, proj, torus) =
            (in_set(&sets.outerplanar), in_set(&sets.planar), in_set(&sets.projective), in_set(&sets.toroidal));
        let other = !planar && !proj && !torus;

        // Each aspect is Some(true) when shown, Some(false) when refuted and
        // None when the bounds leave it open.
        let mut aspects: Vec<(String, Option<bool>)> = vec![
            ("outerplanar".into(), Some(v.outerplanar == outer)),
            ("planar".into(), Some(v.planar == planar)),
        ];
        if planar {
            aspects.push(("genus-0 certificate".into(), v.genus_upper.map(|u| u == 0)));
        }
        let exact = |lo: u64, hi: Option<u64>, t: u64| -> Option<bool> {
            if lo > t || hi.is_some_and(|h| h < t) {
                Some(false)
            } else {
                hi.map(|h| h == t && lo == t)
            }
        };
        if !planar {
            let p = exact(v.crosscap_lower, v.crosscap_upper, 1);
            aspects.push(("projective-planar".into(), if proj { p } else { p.map(|e| !e) }));
            let t = exact(v.genus_lower, v.genus_upper, 1);
            aspects.push(("toroidal".into(), if torus { t } else { t.map(|e| !e) }));
        } else {
            aspects.push(("projective-planar".into(), Some(!v.is_projective_planar())));
            aspects.push(("toroidal".into(), Some(!v.is_toroidal())));
        }
        if other {
            aspects.push(("genus lower bound".into(), Some(v.genus_lower >= sets.other_genus_at_least)));
            aspects.push(("crosscap lower bound".into(), Some(v.crosscap_lower >= sets.other_crosscap_at_least)));
        }
        let window = sets.forbidden_crosscap;
        let window_ok = if v.crosscap_upper.is_some_and(|u| u < window) || v.crosscap_lower > window {
            Some(true)
        } else if v.crosscap() == Some(window) {
            Some(false)
        } else {
            None
        };
        aspects.push((format!("crosscap != {window}"), window_ok));

        let failed: Vec<&str> = aspects.iter().filter(|a| a.1 == Some(false)).map(|a| a.0.as_str()).collect();
        let open: Vec<&str> = aspects.iter().filter(|a| a.1.is_none()).map(|a| a.0.as_str()).collect();
        let status = if !failed.is_empty() {
            Status::Fail
        } else if !open.is_empty() || v.pinned || v.budget_limited {
            Status::Partial
        } else {
            Status::Pass
        };

        let bound = |lo: u64, hi: Option<u64>| match hi {
            Some(h) if h == lo => lo.to_string(),
            Some(h) => format!("{lo}..{h}"),
            None => format!(">={lo}"),
        };
        let mut classes = Vec::new();
        for (flag, label) in [(outer, "outerplanar"), (planar, "planar"), (proj, "projective-planar"), (torus, "toroidal")] {
            if flag {
                classes.push(label.to_string());
            }
        }
        if other {
            classes.push(format!(
                "genus>={}, crosscap>={}",
                sets.other_genus_at_least, sets.other_crosscap_at_least
            ));
        }
        let mut witness = v.evidence.clone();
        if !failed.is_empty() {
            witness.insert(0, format!("contradicted: {}", failed.join(", ")));
        }
        if !open.is_empty() {
            witness.insert(0, format!("undecided: {}", open.join(", ")));
        }
        GroupCheck {
            group: name,
            status,
            observed: format!(
                "outerplanar={}, planar={}, genus={}, crosscap={}",
                v.outerplanar,
                v.planar,
                bound(v.genus_lower, v.genus_upper),
                bound(v.crosscap_lower, v.crosscap_upper)
            ),
            expected: classes.join("; "),
            witness: Some(witness.join("; ")),
        }
    }
}
