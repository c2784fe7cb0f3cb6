"""Command to augment a block into a triangulation."""

from bookembed.augment import lemma1_augment, stellate
from bookembed.cli.context import Context
from bookembed.exceptions import NotPlanar
from bookembed.planarity import planar_embed
from bookembed.serialization import emit_augmentation_json, emit_edge_list


def augment(context: Context) -> int:
    """
    Augment subcommand.

    Arguments:
        context: The invocation context.

    Raises:
        NotPlanar: When the input graph is not planar.

    Returns:
        int: Always 0, failures are raised.
    """
    graph = context.read_graph()
    rotation = planar_embed(graph)
    if not rotation:
        raise NotPlanar("The graph is not planar")
    augmented, augmented_rotation, lemma1_trace = lemma1_augment(graph, rotation)
    triangulation, triangulation_rotation, stellation_trace = stellate(augmented, augmented_rotation)
    trace = lemma1_trace.then(stellation_trace)
    if context.format("json") == "edgelist":
        context.write(emit_edge_list(triangulation))
    else:
        context.write(emit_augmentation_json(triangulation, triangulation_rotation, trace))
    return 0
