use rand::Rng;

/// Cart-pole physics constants, matching the classic control reference
/// implementation (cartpole-v0).
#[derive(Debug, Clone, PartialEq)]
pub struct CartPoleParams {
    pub gravity: f64,
    pub cart_mass: f64,
    pub pole_mass: f64,
    /// Half the pole length.
    pub half_length: f64,
    pub force_mag: f64,
    /// Euler integration step (seconds).
    pub tau: f64,
    pub theta_threshold: f64,
    pub x_threshold: f64,
    pub max_steps: usize,
    /// Start components are drawn uniformly from `[-start_noise, start_noise]`.
    pub start_noise: f64,
}

impl Default for CartPoleParams {
    fn default() -> Self {
        CartPoleParams {
            gravity: 9.8,
            cart_mass: 1.0,
            pole_mass: 0.1,
            half_length: 0.5,
            force_mag: 10.0,
            tau: 0.02,
            theta_threshold: 12.0 * 2.0 * std::f64::consts::PI / 360.0,
            x_threshold: 2.4,
            max_steps: 200,
            start_noise: 0.05,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartPoleState {
    pub x: f64,
    pub x_dot: f64,
    pub theta: f64,
    pub theta_dot: f64,
}

impl CartPoleState {
    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.x_dot, self.theta, self.theta_dot]
    }
}

impl CartPoleParams {
    pub fn reset<R: Rng + ?Sized>(&self, rng: &mut R) -> CartPoleState {
        let n = self.start_noise;
        let mut draw = || if n > 0.0 { rng.gen_range(-n..n) } else { 0.0 };
        CartPoleState {
            x: draw(),
            x_dot: draw(),
            theta: draw(),
            theta_dot: draw(),
        }
    }

    /// Signed force for action 0 (push left) or 1 (push right).
    pub fn force(&self, action: usize) -> f64 {
        if action == 1 {
            self.force_mag
        } else {
            -self.force_mag
        }
    }

    /// One explicit-Euler step of the cart-pole dynamics.
    pub fn integrate(&self, s: CartPoleState, action: usize) -> CartPoleState {
        let force = self.force(action);
        let total_mass = self.cart_mass + self.pole_mass;
        let pole_mass_length = self.pole_mass * self.half_length;
        let (sin, cos) = s.theta.sin_cos();
        let temp = (force + pole_mass_length * s.theta_dot * s.theta_dot * sin) / total_mass;
        let theta_acc = (self.gravity * sin - cos * temp)
            / (self.half_length * (4.0 / 3.0 - self.pole_mass * cos * cos / total_mass));
        let x_acc = temp - pole_mass_length * theta_acc * cos / total_mass;
        CartPoleState {
            x: s.x + self.tau * s.x_dot,
            x_dot: s.x_dot + self.tau * x_acc,
            theta: s.theta + self.tau * s.theta_dot,
            theta_dot: s.theta_dot + self.tau * theta_acc,
        }
    }

    /// Pole fallen or cart off the track.
    pub fn failed(&self, s: &CartPoleState) -> bool {
        s.x < -self.x_threshold
            || s.x > self.x_threshold
            || s.theta < -self.theta_threshold
            || s.theta > self.theta_threshold
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reset_is_near_zero() {
        let p = CartPoleParams::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let s = p.reset(&mut rng);
            for v in s.to_array() {
                assert!(v.abs() < 0.05);
            }
        }
    }

    #[test]
    fn upright_rest_state_is_pushed_by_force() {
        let p = CartPoleParams::default();
        let s = p.integrate(CartPoleState::default(), 1);
        // positions only change through velocities, which start at zero
        assert_eq!(s.x, 0.0);
        assert_eq!(s.theta, 0.0);
        assert!(s.x_dot > 0.0);
        assert!(s.theta_dot < 0.0);
        // F/(M) minus the pole's reaction, times tau
        let expected_x_acc = {
            let total = 1.1;
            let temp = 10.0 / total;
            let theta_acc = -temp / (0.5 * (4.0 / 3.0 - 0.1 / total));
            temp - 0.05 * theta_acc / total
        };
        assert!((s.x_dot - 0.02 * expected_x_acc).abs() < 1e-15);
    }

    #[test]
    fn failure_thresholds() {
        let p = CartPoleParams::default();
        let mut s = CartPoleState::default();
        assert!(!p.failed(&s));
        s.theta = 0.21;
        assert!(p.failed(&s));
        s.theta = 0.0;
        s.x = -2.41;
        assert!(p.failed(&s));
    }
}
