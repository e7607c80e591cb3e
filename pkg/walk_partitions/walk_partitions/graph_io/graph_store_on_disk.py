import json
import logging
import pathlib

from pydantic import ValidationError

from walk_partitions.walk_partitions.graph_io.graph_schema import GraphFileException, \
    GraphSchema
from walk_partitions.walk_partitions.graph_io.graph_store_base import GraphStoreBase

logger = logging.getLogger(__name__)


class GraphStoreOnDisk(GraphStoreBase):

    def read_graph(self, path: str) -> GraphSchema:
        """
        Method reads a graph from a json file.
        :param path: Path to file.
        :return: Validated graph structure.
        """
        with open(path, "r") as fh:
            try:
                file_data = json.load(fh)
            except ValueError as err:
                raise GraphFileException(f"File '{path}' is not valid JSON: {err}") from None
        try:
            schema = GraphSchema.model_validate(file_data)
        except ValidationError as err:
            raise GraphFileException(f"File '{path}' does not describe a graph: {err}") \
                from None
        logger.debug("Read graph with %d vertices and %d edges from '%s'",
                     len(schema.vertices), len(schema.edges), path)
        return schema

    def save_graph(self, path: str, schema: GraphSchema) -> None:
        """
        Method saves a graph to a json file.
        :param path: Path to file in which the graph should be saved.
        :param schema: Graph structure that should be saved.
        """
        pathlib.Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, mode="w") as fh:
            json.dump(schema.model_dump(by_alias=True), fh, indent=2)
