use proptest::prelude::*;

use ziptensor::blocks::sigma;
use ziptensor::compositions::{compositions_desc_lex, p_set, q_set, rank_desc_lex};
use ziptensor::{build_tensor, decode, encode, zipper, MiddleWord, OrderedTree, ZipperWord};

fn dyck_word() -> impl Strategy<Value = String> {
    (1u32..=14).prop_flat_map(|k| {
        proptest::collection::vec(any::<bool>(), (2 * k) as usize).prop_map(move |coins| {
            // balance the random steps into a Dyck path
            let mut out = String::from("0");
            let (mut up, mut down) = (0u32, 0u32);
            for c in coins {
                if (c || up == down) && up < k {
                    out.push('0');
                    up += 1;
                } else if down < up {
                    out.push('1');
                    down += 1;
                }
            }
            while down < up {
                out.push('1');
                down += 1;
            }
            out
        })
    })
}

fn middle_word() -> impl Strategy<Value = MiddleWord> {
    (1u32..=12, any::<u64>(), any::<bool>()).prop_map(|(k, seed, heavy)| {
        let len = 2 * k + 1;
        let weight = if heavy { k + 1 } else { k };
        // pick `weight` positions by a seeded shuffle
        let mut positions: Vec<u32> = (0..len).collect();
        let mut s = seed;
        for j in (1..positions.len()).rev() {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            positions.swap(j, (s >> 33) as usize % (j + 1));
        }
        let bits = positions[..weight as usize]
            .iter()
            .fold(0u64, |acc, &p| acc | 1 << p);
        MiddleWord::from_packed(bits, len).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_is_a_bijection(n in 1u32..=14, parts_seed in any::<u32>(), seed in any::<u64>()) {
        let parts = 1 + parts_seed % n;
        let all = compositions_desc_lex(n, parts).unwrap();
        let idx = (seed % all.len() as u64) as usize;
        prop_assert_eq!(rank_desc_lex(&all[idx], n).unwrap(), idx);
        for pair in all.windows(2) {
            prop_assert!(pair[0].parts() > pair[1].parts());
        }
    }

    #[test]
    fn unzip_inverts_zipper(k in 2u32..=14, i_seed in any::<u32>(), a in any::<u64>(), b in any::<u64>()) {
        let i = 1 + i_seed % k;
        let rows = p_set(k, i).unwrap();
        let cols = q_set(k, i).unwrap();
        let a = &rows[(a % rows.len() as u64) as usize];
        let b = &cols[(b % cols.len() as u64) as usize];
        let w = zipper(a, b).unwrap();
        prop_assert_eq!(w.len(), 2 * k as usize + 1);
        let (a2, b2) = w.unzip().unwrap();
        prop_assert_eq!(&a2, a);
        prop_assert_eq!(&b2, b);
    }

    #[test]
    fn encode_inverts_decode(word in dyck_word()) {
        let w: ZipperWord = word.parse().unwrap();
        prop_assert!(w.is_tree_word());
        let tree = decode(&w).unwrap();
        prop_assert_eq!(encode(&tree).unwrap(), w);
        prop_assert_eq!(OrderedTree::from_parens(&tree.to_parens()).unwrap(), tree.clone());
        prop_assert_eq!(tree.leaves(), tree.descent_runs());
    }

    #[test]
    fn rotation_keeps_weight(w in middle_word(), t in -100i64..100) {
        let r = w.rotate(t);
        prop_assert_eq!(r.weight(), w.weight());
        prop_assert_eq!(r.rotate(-t), w);
    }

    #[test]
    fn complemented_reversal_is_an_involution(w in middle_word()) {
        let c = w.comp_reverse();
        prop_assert_eq!(c.comp_reverse(), w);
        prop_assert_eq!(c.weight() + w.weight(), w.len() as u32);
    }

    #[test]
    fn hockey_stick(p in 1u64..=30, q in 0u64..=30) {
        let sum: u64 = (1..=p).map(|l| sigma(l, q)).sum();
        prop_assert_eq!(sum, sigma(p, q + 1));
    }

    #[test]
    fn entry_matches_partial_sums(k in 2u32..=12, i_seed in any::<u32>(), a in any::<u64>(), b in any::<u64>()) {
        let i = 1 + i_seed % k;
        let t = build_tensor(k, i).unwrap();
        let p = (a % t.side() as u64) as usize;
        let q = (b % t.side() as u64) as usize;
        let mut s = 0i64;
        let positive = t.rows()[p].parts().iter().zip(t.cols()[q].parts()).all(|(&x, &y)| {
            s += i64::from(x) - i64::from(y);
            s > 0
        });
        prop_assert_eq!(t.get(p, q), positive);
    }
}
