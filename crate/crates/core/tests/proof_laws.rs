mod common;

use std::ops::ControlFlow;

use nilpath_core::{
    charpoly_path, class2_decompose, class_census, classify, count_walks, for_each_walk,
    naive_pivot, naive_reflect, path_adjacency, ClassTag, EnumConfig, Gf2Matrix, Walk,
};

fn all_walks(n: usize, k: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    for x in 1..=n {
        let _ = for_each_walk::<()>(n, x, None, k, &EnumConfig::default(), |vs| {
            out.push(Walk::new(vs.to_vec()));
            ControlFlow::Continue(())
        })
        .unwrap();
    }
    out
}

#[test]
fn partition_law() {
    for n in 1..=7 {
        for k in 0..=10 {
            let walks = all_walks(n, k);
            for pivot in 1..=n {
                let mut tally = vec![[0u64; 3]; (n + 1) * (n + 1)];
                for w in &walks {
                    let idx = match classify(n, w, pivot).unwrap().tag {
                        ClassTag::Class1 => 0,
                        ClassTag::Class2 => 1,
                        ClassTag::Class3 => 2,
                    };
                    tally[w.start() * (n + 1) + w.end()][idx] += 1;
                }
                for x in 1..=n {
                    for y in 1..=n {
                        let c = class_census(n, pivot, x, y, k).unwrap();
                        let dp = [&c.c1, &c.c2, &c.c3].map(|b| u64::try_from(b).unwrap());
                        assert_eq!(dp, tally[x * (n + 1) + y], "n={n} k={k} p={pivot} {x}->{y}");
                    }
                }
            }
        }
    }
}

#[test]
fn splice_law() {
    for k in 0..=10 {
        for w in all_walks(7, k) {
            for pivot in 1..=7 {
                if classify(7, &w, pivot).unwrap().tag != ClassTag::Class2 {
                    continue;
                }
                let split = class2_decompose(7, &w, pivot).unwrap();
                assert_eq!(split.splice(pivot), w);
                for part in [&split.left, &split.right].into_iter().flatten() {
                    let below = part.vertices().iter().all(|&v| v < pivot);
                    let above = part.vertices().iter().all(|&v| v > pivot);
                    assert!(below || above, "{w} around {pivot}");
                }
                let left_len = split.left.as_ref().map_or(0, |l| l.len() + 1);
                assert_eq!(left_len, split.step);
            }
        }
    }
}

#[test]
fn naive_reflection_is_involutive_where_it_keeps_the_pivot() {
    let mut checked = 0;
    for k in 0..=10 {
        for w in all_walks(7, k) {
            let Some(pivot) = naive_pivot(&w) else {
                continue;
            };
            let Ok(image) = naive_reflect(7, &w) else {
                continue;
            };
            if naive_pivot(&image) == Some(pivot) {
                checked += 1;
                assert_eq!(naive_reflect(7, &image).unwrap(), w);
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn nilpotent_iff_charpoly_monomial() {
    for n in 1..=256 {
        let nilpotent = path_adjacency(n).unwrap().nilpotency_index().is_some();
        assert_eq!(nilpotent, charpoly_path(n).is_monomial(n), "n = {n}");
    }
}

#[test]
fn charpoly_matches_determinant_expansion() {
    for n in 0..=10 {
        let oracle = common::reduce_mod2(&common::symbolic_charpoly_path(n));
        assert_eq!(charpoly_path(n), oracle, "n = {n}");
    }
    // Sanity of the oracle itself: det(λI - A_2) = λ^2 - 1.
    assert_eq!(common::symbolic_charpoly_path(2), vec![-1, 0, 1]);
}

#[test]
fn generic_counts_agree_across_scalars() {
    for n in 1..=9 {
        for k in 0..=14 {
            let a = path_adjacency(n).unwrap().pow(k as u64);
            for x in 1..=n {
                for y in 1..=n {
                    let wide: u64 = count_walks(n, x, y, k).unwrap();
                    let bit: nilpath_core::Gf2 = count_walks(n, x, y, k).unwrap();
                    assert_eq!(wide % 2 == 1, bit.0);
                    assert_eq!(bit.0, a.get(x, y));
                }
            }
        }
    }
}

#[test]
fn packed_kernel_matches_naive_oracle() {
    for n in [1, 5, 17, 63, 64] {
        let a = Gf2Matrix::from_entries(n, |i, j| (i * i + 3 * j) % 7 < 3).unwrap();
        let b = path_adjacency(n).unwrap();
        assert_eq!(a.mul(&b).unwrap(), common::naive_gf2_mul(&a, &b));
        assert_eq!(b.mul(&a).unwrap(), common::naive_gf2_mul(&b, &a));
    }
}
