from hypothesis import HealthCheck, settings

# oracles are brute force, so per-example time varies a lot
settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")
