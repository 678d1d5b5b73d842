from .constructions import (
    ConstructionParams,
    construct,
    cycle_graph,
    general_r,
    irregular54,
    knits,
    knits_params,
)
from .errors import *
from .extended import INFINITE
from .hypergraph import (
    DistanceMatrix,
    Hypergraph,
    delete_vertex,
    detour_sum,
    diameter,
    distance_distribution,
    distance_matrix,
    is_connected,
    soltes_report,
    transmission,
    wiener,
)
from .report import SoltesReport, VertexReport
from .weighted import (
    WeightedGraph,
    integerize,
    prism_soltes,
    soltes_report_w,
    wiener_w,
)

__version__ = '0.1.0'
