from hypothesis import HealthCheck, settings

# Field table construction can make a first example slow; wall-clock
# deadlines are noise here, correctness is exact.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
