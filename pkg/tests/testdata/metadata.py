from os.path import dirname, join

path_to_testdata = dirname(__file__)
path_to_config = join(path_to_testdata, "config", "tripoly.yml")
path_to_partial_config = join(path_to_testdata, "config", "partial.yml")
path_to_points = join(path_to_testdata, "points")
path_to_convex_pentagon = join(path_to_points, "convex_pentagon.txt")
path_to_bump = join(path_to_points, "bump.txt")
path_to_zigzag = join(path_to_points, "zigzag.txt")
path_to_db = join(path_to_testdata, "db")
path_to_triangle_db = join(path_to_db, "otypes03.b08")
path_to_collinear_db = join(path_to_db, "collinear03.b08")
path_to_quickstart_config = join(
    dirname(dirname(path_to_testdata)), "quickstart", "exampledata", "config", "tripoly.yml"
)
