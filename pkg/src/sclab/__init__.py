"""sclab: an exact-arithmetic laboratory for Schubert problems.

Formulates Schubert problems on Grassmannians as determinantal polynomial
systems, counts their real solutions over osculating and secant flag
configurations, and probes their Galois groups by Frobenius cycle-type
sampling modulo primes.
"""

__version__ = "0.1.0"
