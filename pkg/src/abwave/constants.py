"""Physical constants (CODATA 2018, SI units).

Hard-coded rather than imported so that every run, on every platform,
uses bit-identical values.
"""

PLANCK = 6.62607015e-34          # J s (exact)
HBAR = 1.054571817e-34           # J s
ELEMENTARY_CHARGE = 1.602176634e-19   # C (exact)
ELECTRON_MASS = 9.1093837015e-31      # kg
SPEED_OF_LIGHT = 299792458.0     # m/s (exact)
