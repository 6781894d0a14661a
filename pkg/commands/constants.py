def get_ring_specified_config(family):
    """Per-family overrides, applied after the command line."""
    cfg = {
        "poly": {
            "ENUM.DEGREE_BOUND": 7,
        },
        "shifted": {
            "ENUM.DEGREE_BOUND": 6,
            "MMATRIX.WEIGHT_MULTIPLES": [1, 2],
        },
        "elliptic": {
            "ENUM.DEGREE_BOUND": 6,
            "ENUM.MAX_DIM": 12,
        },
    }.get(family, {})

    return [item for sublist in cfg.items() for item in sublist]
