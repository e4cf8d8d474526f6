"""Commands that build and apply embeddings: sample, embed."""

import logging

from .context import CommandContext
from .group_commands import add_plan_arguments
from config.settings import EXIT_OK
from services.data_service import DataService
from services.embedding_service import build_config, embed_dataset

logger = logging.getLogger(__name__)


def resolve_config(ctx: CommandContext, spec: dict, action):
    """Embedding config from --config when given, sampled from (--n, --p, seed) otherwise."""
    if getattr(ctx.args, 'config', None):
        config = DataService.config_from_dict(DataService.load_json(ctx.args.config))
        ctx.manifest.record_input(ctx.args.config)
    else:
        config = build_config(spec, action, n=ctx.args.n, p=ctx.args.p, seed=ctx.seed,
                              reduce=ctx.args.reduce)
    ctx.manifest.config.update(DataService.config_to_dict(config))
    return config


def cmd_sample(ctx: CommandContext) -> int:
    """Emit a sampled window bank, selection and optional reduction as JSON."""
    spec, action = ctx.load_action(ctx.args.group_spec)
    config = resolve_config(ctx, spec, action)
    ctx.emit_json(DataService.config_to_dict(config))
    return EXIT_OK


def cmd_embed(ctx: CommandContext) -> int:
    spec, action = ctx.load_action(ctx.args.group_spec)
    dataset = ctx.load_dataset(ctx.args.dataset, action)
    config = resolve_config(ctx, spec, action)
    matrix = embed_dataset(config, action, dataset, threads=ctx.args.threads)
    ids = dataset.ids if ctx.args.id_column else None
    ctx.emit_text(DataService.embedding_csv(matrix, ids))
    logger.info("Embedded %d points into %d columns", matrix.shape[0], matrix.shape[1])
    return EXIT_OK


def add_config_arguments(parser) -> None:
    add_plan_arguments(parser)
    parser.add_argument('--seed', type=int, default=None, help="Master seed (COORBIT_SEED overrides)")
    parser.add_argument('--config', default=None, help="Use a config written by 'sample' instead of sampling")
    reduce = parser.add_mutually_exclusive_group()
    reduce.add_argument('--reduce', dest='reduce', action='store_true', default=None,
                        help="Always apply a sampled reduction to 2d coordinates")
    reduce.add_argument('--no-reduce', dest='reduce', action='store_false',
                        help="Never apply a reduction")


def register(subparsers, common) -> None:
    p_sample = subparsers.add_parser('sample', parents=[common], help="Sample an embedding config")
    p_sample.add_argument('group_spec')
    add_config_arguments(p_sample)
    p_sample.set_defaults(func=cmd_sample)

    p_embed = subparsers.add_parser('embed', parents=[common], help="Embed a dataset CSV")
    p_embed.add_argument('group_spec')
    p_embed.add_argument('dataset')
    p_embed.add_argument('--id-column', action='store_true', help="First CSV column holds point ids")
    add_config_arguments(p_embed)
    p_embed.set_defaults(func=cmd_embed, default_manifest=True)
