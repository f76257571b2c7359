//! Random symmetric tridiagonal matrices against the bisection/inverse
//! iteration solver.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use su2cp::numerics::{eigh_tridiagonal, matmul, max_abs_diff, sturm_count, transpose, Matrix, SymTridiag};

fn random_tridiag(rng: &mut StdRng, n: usize) -> SymTridiag {
    let diag = (0..n).map(|_| rng.gen_range(-10.0..=10.0)).collect();
    let off = (0..n - 1).map(|_| rng.gen_range(-10.0..=10.0)).collect();
    SymTridiag::new(diag, off).unwrap()
}

#[test]
fn random_matrices_residual_and_orthogonality() {
    let mut rng = StdRng::seed_from_u64(0x5u64 << 40 | 2017);
    let sizes = [1usize, 2, 3, 7, 16, 33, 64, 100, 150, 200, 200, 200];
    for &n in &sizes {
        let t = random_tridiag(&mut rng, n);
        let eig = eigh_tridiagonal(&t, 1e-12).unwrap();
        assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let v = &eig.vectors;
        let av = matmul(&t.to_dense(), v).unwrap();
        let vl = matmul(v, &Matrix::diagonal(&eig.eigenvalues)).unwrap();
        let residual = max_abs_diff(&av, &vl).unwrap();
        let gram = max_abs_diff(&matmul(&transpose(v), v).unwrap(), &Matrix::identity(n)).unwrap();
        assert!(residual < 1e-9, "n={n}: residual {residual:e}");
        assert!(gram < 1e-9, "n={n}: orthogonality {gram:e}");
    }
}

#[test]
fn sturm_count_agrees_with_bisection() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in [5usize, 40, 120] {
        let t = random_tridiag(&mut rng, n);
        let eig = eigh_tridiagonal(&t, 1e-12).unwrap();
        for _ in 0..50 {
            let shift: f64 = rng.gen_range(-35.0..35.0);
            if eig.eigenvalues.iter().any(|l| (l - shift).abs() < 1e-9) {
                continue;
            }
            let below = eig.eigenvalues.iter().filter(|&&l| l < shift).count();
            assert_eq!(sturm_count(&t, shift), below, "n={n} shift={shift}");
        }
    }
}

#[test]
fn root_twelve_chain_matches_closed_form() {
    let (r12, r2) = (12f64.sqrt(), 2f64.sqrt());
    let t = SymTridiag::new(vec![0.0; 5], vec![r12, r2, r2, r12]).unwrap();
    let eig = eigh_tridiagonal(&t, 1e-14).unwrap();
    let want = [-4.0, -2.0 * 3f64.sqrt(), 0.0, 2.0 * 3f64.sqrt(), 4.0];
    for (got, want) in eig.eigenvalues.iter().zip(want) {
        assert!((got - want).abs() < 1e-13, "{got} vs {want}");
    }
}
