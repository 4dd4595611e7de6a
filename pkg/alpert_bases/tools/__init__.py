from .random_instances import (
    points_on_moment_curve,
    points_on_plane,
    random_atomic_measure,
    random_family,
    random_points,
    random_polynomial,
)
from .schema import model_schema, report_schemas
