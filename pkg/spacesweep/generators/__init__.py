from spacesweep.generators.instances import (
    Shape,
    shape_kind,
    generate,
    random_points,
    random_segments,
    random_axis_segments,
    random_rectangles,
)
