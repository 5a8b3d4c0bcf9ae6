use cycad::profile::{
    alpha, beta, equivariance_sigma, source_by_rotation, source_by_window, Color, IndexMap, Permutation, Profile, Source,
};

const MAX: usize = 6;

/// Positions of the legs of both factors in `c̲ ∘ᵢʲ d̲`, straight from the
/// list `c₀…c_{i−1}, d_{j+1}…d_m, d₀…d_{j−1}, c_{i+1}…cₙ`.
fn placement(n: usize, m: usize, i: usize, j: usize) -> Vec<Source> {
    let mut out: Vec<Source> = (0..i).map(Source::Left).collect();
    out.extend((j + 1..=m).map(Source::Right));
    out.extend((0..j).map(Source::Right));
    out.extend((i + 1..=n).map(Source::Left));
    out
}

fn cases() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..=MAX).flat_map(|n| {
        (0..=MAX).flat_map(move |m| (0..=n).flat_map(move |i| (0..=m).map(move |j| (n, m, i, j))))
    })
}

#[test]
fn alpha_and_beta_place_legs_as_the_surgery_does() {
    for (n, m, i, j) in cases() {
        let a = alpha(i, m, n).unwrap();
        let b = beta(j, i, m, n).unwrap();
        for (pos, src) in placement(n, m, i, j).into_iter().enumerate() {
            match src {
                Source::Left(x) => assert_eq!(a.get(x), Some(pos), "α n={n} m={m} i={i} x={x}"),
                Source::Right(y) => assert_eq!(b.get(y), Some(pos), "β n={n} m={m} i={i} j={j} y={y}"),
            }
        }
        if n + m > 0 {
            assert!(a.union_is_bijection_onto(&b, n + m));
        }
    }
}

#[test]
fn beta_is_a_rotated_beta_zero() {
    for (n, m, i, j) in cases() {
        let rotated = beta(0, i, m, n).unwrap().precompose(&Permutation::tau_power(m + 1, -(j as i64)));
        assert_eq!(beta(j, i, m, n).unwrap(), rotated, "n={n} m={m} i={i} j={j}");
    }
}

fn same(f: &IndexMap, g: &IndexMap) -> bool {
    f == g
}

#[test]
fn rotation_identities_for_the_placements() {
    for n in 0..=MAX {
        for m in 0..=MAX {
            if n + m == 0 {
                continue;
            }
            let big = |k: i64| Permutation::tau_power(n + m, k);
            let small = Permutation::tau_power(n + 1, 1);
            if m > 0 {
                assert!(same(
                    &alpha(0, m, n).unwrap().precompose(&small),
                    &alpha(n, m, n).unwrap().postcompose(&big(m as i64))
                ));
            }
            for j in 0..=m {
                assert!(same(&beta(j, 0, m, n).unwrap(), &beta(j, n, m, n).unwrap().postcompose(&big(m as i64))));
            }
            for i in 1..=n {
                assert!(same(
                    &alpha(i, m, n).unwrap().precompose(&small),
                    &alpha(i - 1, m, n).unwrap().postcompose(&big(1))
                ));
                for j in 0..=m {
                    assert!(same(&beta(j, i, m, n).unwrap(), &beta(j, i - 1, m, n).unwrap().postcompose(&big(1))));
                }
            }
        }
    }
}

#[test]
fn both_descriptions_of_the_composite_legs_agree() {
    for (n, m, i, j) in cases() {
        for p in 0..n + m {
            let expected = placement(n, m, i, j)[p];
            assert_eq!(source_by_window(n, m, i, j, p).unwrap(), expected);
            assert_eq!(source_by_rotation(n, m, i, j, p).unwrap(), expected);
        }
    }
}

#[test]
fn sigma_k_is_the_conjugate() {
    for len in 1..=5 {
        for sigma in Permutation::all(len) {
            for k in 0..len {
                let conj = Permutation::tau_power(len, -(sigma.apply(k) as i64))
                    .compose(&sigma)
                    .compose(&Permutation::tau_power(len, k as i64));
                let sk = sigma.conjugate_sigma_k(k);
                assert_eq!(sk, conj);
                assert_eq!(sk.apply(0), 0);
                for r in 0..len {
                    assert_eq!(sk.apply(r), (sigma.apply((k + r) % len) + len - sigma.apply(k)) % len);
                }
            }
        }
    }
}

#[test]
fn rotation_branch_of_equivariance() {
    for n in 0..=5 {
        for m in 0..=5 {
            if n + m == 0 {
                continue;
            }
            let tau = Permutation::tau_power(n + 1, 1);
            let id = Permutation::identity(m + 1);
            for j in 0..=m {
                for i in 0..n {
                    assert_eq!(equivariance_sigma(&tau, &id, i, j).unwrap(), Permutation::tau_power(n + m, 1));
                }
                assert_eq!(equivariance_sigma(&tau, &id, n, j).unwrap(), Permutation::tau_power(n + m, m as i64));
            }
        }
    }
}

#[test]
fn worked_surgeries() {
    let c = |s: &str| Color::named(s);
    let p = |v: &[&str]| Profile(v.iter().map(|s| c(s)).collect());
    assert_eq!(p(&["a", "b", "c"]).compose(2, 0, &p(&["c", "d"])).unwrap(), p(&["a", "b", "d"]));
    let d = p(&["d0", "d1", "d2"]);
    assert_eq!(p(&["e", "d2"]).compose(1, 2, &d).unwrap(), p(&["e", "d0", "d1"]));
    assert_eq!(p(&["d2", "e"]).compose(0, 2, &d).unwrap(), p(&["d0", "d1", "e"]));
    assert_eq!(p(&["c"]).compose(0, 0, &p(&["c†"])).unwrap(), Profile::empty());
    assert_eq!(
        p(&["a", "b", "c"]).act(&Permutation::tau(3).unwrap()).unwrap(),
        p(&["b", "c", "a"])
    );
}

#[test]
fn worked_alpha_beta_example() {
    let b = beta(3, 1, 4, 3).unwrap();
    assert_eq!(b.pairs().collect::<Vec<_>>(), vec![(0, 2), (1, 3), (2, 4), (4, 1)]);
    let a = alpha(1, 4, 3).unwrap();
    assert_eq!(a.pairs().collect::<Vec<_>>(), vec![(0, 0), (2, 5), (3, 6)]);
    assert!(a.union_is_bijection_onto(&b, 7));
}
