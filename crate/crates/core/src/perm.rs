/// All permutations of `0..n` paired with their signs, in lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push((perm.clone(), sign(&perm)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Sign of a permutation by inversion count.
pub fn sign(perm: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
