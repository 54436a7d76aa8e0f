//! Small groupoids used in examples and tests.

use super::{validate_groupoid, FiniteGroupoid, GroupoidTables};

fn padded(prefix: &str, i: usize, count: usize) -> String {
    let w = count.saturating_sub(1).to_string().len();
    format!("{prefix}{i:0w$}")
}

/// A group as a one-object groupoid. `mul(a, b)` is the product of the
/// elements with indices `a` and `b`; index 0 must be the identity.
pub fn group(names: &[String], mul: impl Fn(usize, usize) -> usize) -> FiniteGroupoid {
    let e = &names[0];
    let mut t = GroupoidTables { morphisms: names.to_vec(), units: vec![e.clone()], ..Default::default() };
    for (i, g) in names.iter().enumerate() {
        t.source.insert(g.clone(), e.clone());
        t.range.insert(g.clone(), e.clone());
        for (j, h) in names.iter().enumerate() {
            t.compose.push([g.clone(), h.clone(), names[mul(i, j)].clone()]);
        }
    }
    validate_groupoid(&t).expect("catalog group")
}

/// `Z/k` with elements `g0, g1, ...` (zero-padded).
pub fn cyclic(k: usize) -> FiniteGroupoid {
    let names: Vec<String> = (0..k).map(|i| padded("g", i, k)).collect();
    group(&names, |a, b| (a + b) % k)
}

/// `Z/2` with elements `e` and `t`.
pub fn z2() -> FiniteGroupoid {
    group(&["e".to_string(), "t".to_string()], |a, b| (a + b) % 2)
}

/// The symmetric group on three letters.
pub fn symmetric3() -> FiniteGroupoid {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let names: Vec<String> = perms.iter().map(|p| format!("s{}{}{}", p[0], p[1], p[2])).collect();
    group(&names, |a, b| {
        let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
        perms.iter().position(|p| *p == c).unwrap()
    })
}

/// Pair groupoid on `{1..k}`: one arrow `p{i}{j}` from `j` to `i` for each
/// ordered pair, with `p{i}{j}·p{j}{l} = p{i}{l}`.
pub fn pair(k: usize) -> FiniteGroupoid {
    transitive(1, k)
}

/// Units only.
pub fn trivial(k: usize) -> FiniteGroupoid {
    let names: Vec<String> = (0..k).map(|i| padded("x", i, k)).collect();
    let mut t = GroupoidTables { morphisms: names.clone(), units: names.clone(), ..Default::default() };
    for x in &names {
        t.source.insert(x.clone(), x.clone());
        t.range.insert(x.clone(), x.clone());
        t.compose.push([x.clone(), x.clone(), x.clone()]);
    }
    validate_groupoid(&t).expect("catalog groupoid")
}

/// `Z/q × Pair(k)`: a transitive groupoid on `k` objects with isotropy `Z/q`.
/// Arrows are named `p{i}{j}` when `q = 1` and `p{i}{j}g{a}` otherwise.
pub fn transitive(q: usize, k: usize) -> FiniteGroupoid {
    let pt = |i: usize| if k < 10 { (i + 1).to_string() } else { format!("{:02}.", i + 1) };
    let name = |i: usize, j: usize, a: usize| {
        if q == 1 {
            format!("p{}{}", pt(i), pt(j))
        } else {
            format!("p{}{}{}", pt(i), pt(j), padded("g", a, q))
        }
    };
    let mut t = GroupoidTables::default();
    for i in 0..k {
        t.units.push(name(i, i, 0));
        for j in 0..k {
            for a in 0..q {
                let g = name(i, j, a);
                t.morphisms.push(g.clone());
                t.source.insert(g.clone(), name(j, j, 0));
                t.range.insert(g.clone(), name(i, i, 0));
                for l in 0..k {
                    for b in 0..q {
                        t.compose.push([g.clone(), name(j, l, b), name(i, l, (a + b) % q)]);
                    }
                }
            }
        }
    }
    validate_groupoid(&t).expect("catalog groupoid")
}

/// The action groupoid `Z/2 ⋉ {0, 1}` for the swap action. The arrow `t{x}`
/// goes from `x` to `1 - x`; the units are `e0` and `e1`.
pub fn z2_swap_action() -> FiniteGroupoid {
    let mut t = GroupoidTables { units: vec!["e0".into(), "e1".into()], ..Default::default() };
    let act = |a: usize, x: usize| (a + x) % 2;
    let name = |a: usize, x: usize| format!("{}{x}", if a == 0 { "e" } else { "t" });
    for a in 0..2 {
        for x in 0..2 {
            let g = name(a, x);
            t.morphisms.push(g.clone());
            t.source.insert(g.clone(), name(0, x));
            t.range.insert(g.clone(), name(0, act(a, x)));
            for b in 0..2 {
                // (a, act(b, x)) · (b, x) = (a + b, x)
                t.compose.push([name(a, act(b, x)), name(b, x), name((a + b) % 2, x)]);
            }
        }
    }
    validate_groupoid(&t).expect("catalog groupoid")
}

/// Disjoint union; arrows of component `i` are prefixed with `c{i}:`.
pub fn disjoint_union(parts: &[&FiniteGroupoid]) -> FiniteGroupoid {
    let mut t = GroupoidTables::default();
    for (i, g) in parts.iter().enumerate() {
        let p = |s: &String| format!("{}:{s}", padded("c", i, parts.len()));
        let gt = g.to_tables();
        t.morphisms.extend(gt.morphisms.iter().map(p));
        t.units.extend(gt.units.iter().map(p));
        t.source.extend(gt.source.iter().map(|(a, b)| (p(a), p(b))));
        t.range.extend(gt.range.iter().map(|(a, b)| (p(a), p(b))));
        t.compose.extend(gt.compose.iter().map(|c| [p(&c[0]), p(&c[1]), p(&c[2])]));
    }
    validate_groupoid(&t).expect("catalog groupoid")
}
