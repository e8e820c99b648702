#!/usr/bin/env python3
"""Independent brute-force oracle for the VLC channel chain.

Evaluates the Lambertian DC gain, received signal strength, SINR data
rate and illuminance by direct substitution, with no shared code with
the C++ implementation. Run once to (re)generate
tests/data/channel_oracle.json; the acceptance suite compares the C++
results against the frozen values to 1e-9 relative.
"""
import json
import math
import random
import os

B = 10e6                 # LED modulation bandwidth [Hz]
THETA_MAX = math.pi / 3  # LED semi-angle at half power [rad]
A_PD = 75.44e-6          # PD active area [m^2]
H = 2.5                  # vertical LED-PD distance [m]
NEP = 3.17e-10           # noise equivalent power [W/sqrt(Hz)]
R_EFF = 0.5              # effective responsivity [A/W]
G_TIA = 1.0              # TIA gain [V/A]
MU_LED = 300.0           # luminous efficacy [lm/W]


def lambert_m():
    return -1.0 / math.log2(math.cos(THETA_MAX))


def gain(led, pd, r):
    """Lambertian DC gain; LED points down, PD faces up, so phi == psi."""
    dx = led[0] - pd[0]
    dy = led[1] - pd[1]
    horiz = math.hypot(dx, dy)
    if horiz > r:  # psi > Psi = atan(r/h): out of the PD field of view
        return 0.0
    d = math.sqrt(horiz * horiz + H * H)
    cosang = H / d
    m = lambert_m()
    return (m + 1.0) * A_PD / (2.0 * math.pi * d * d) * (cosang ** m) * cosang


def strength(led, p_w, pd, r):
    h = gain(led, pd, r)
    i = p_w * h * R_EFF
    return (i * G_TIA) ** 2


def sigma2():
    return (R_EFF * NEP * math.sqrt(B) * G_TIA) ** 2


def rate(pd, aps, powers, r):
    lam = [strength(a, p, pd, r) for a, p in zip(aps, powers)]
    if max(lam, default=0.0) == 0.0:
        return 0.0
    serve = lam.index(max(lam))
    interf = sum(v for k, v in enumerate(lam) if k != serve)
    return B * math.log2(1.0 + lam[serve] / (interf + sigma2()))


def illum(pd, aps, powers, r):
    return MU_LED * sum(p * gain(a, pd, r) for a, p in zip(aps, powers)) / A_PD


def main():
    rng = random.Random(20240817)
    r = 3.0
    cases = []
    for _ in range(1000):
        led = (rng.uniform(0, 10), rng.uniform(0, 10))
        # mix of in-range, edge and out-of-range receivers
        ang = rng.uniform(0, 2 * math.pi)
        rad = rng.uniform(0, 1.6 * r)
        pd = (led[0] + rad * math.cos(ang), led[1] + rad * math.sin(ang))
        p_w = rng.uniform(1.0, 60.0)
        n_ap = rng.randint(1, 5)
        aps = [led] + [(rng.uniform(0, 10), rng.uniform(0, 10)) for _ in range(n_ap - 1)]
        powers = [p_w] + [rng.uniform(1.0, 60.0) for _ in range(n_ap - 1)]
        cases.append({
            "led": led, "pd": pd, "p_w": p_w,
            "aps": aps, "powers": powers,
            "gain": gain(led, pd, r),
            "strength": strength(led, p_w, pd, r),
            "rate": rate(pd, aps, powers, r),
            "illum": illum(pd, aps, powers, r),
        })
    out = {
        "params": {"B": B, "theta_max": THETA_MAX, "A_pd": A_PD, "h_led_pd": H,
                   "NEP": NEP, "R_eff": R_EFF, "G_tia": G_TIA, "mu_led": MU_LED,
                   "r": r},
        "sigma2": sigma2(),
        "lambert_m": lambert_m(),
        "cases": cases,
    }
    path = os.path.join(os.path.dirname(__file__), "..", "data", "channel_oracle.json")
    with open(path, "w") as f:
        json.dump(out, f)
    print("wrote", path, len(cases), "cases")


if __name__ == "__main__":
    main()
