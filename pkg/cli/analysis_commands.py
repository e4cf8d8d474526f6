"""Commands that analyse a map on data or adversarially: bounds, separate, collide."""

import numpy as np

from .context import CommandContext
from .embed_commands import add_config_arguments, resolve_config
from config.settings import (
    COLLISION_BUDGET,
    COLLISION_FLOOR,
    COLLISION_STEPS,
    EXIT_OK,
    SEPARATION_TOL,
)
from orbits.metric import orbit_closure
from services.bounds_service import lipschitz_bounds, separation_check, window_margin
from services.collision_service import collision_search
from services.embedding_service import sample_windows
from utils.errors import DomainError, ParseError
from utils.formatting import to_jsonable
from utils.seeding import derive_seeds


def _closed_dataset(ctx: CommandContext, action):
    dataset = ctx.load_dataset(ctx.args.dataset, action)
    closure = orbit_closure(action, dataset)
    if len(closure) != len(dataset):
        ctx.manifest.notes.append(f"orbit closure applied: {len(dataset)} -> {len(closure)} points")
    return closure


def _parse_window(text: str, dim: int) -> np.ndarray:
    try:
        w = np.array([float(v) for v in text.split(",")])
    except ValueError as e:
        raise ParseError(f"--window must be comma-separated numbers, got {text!r}.") from e
    if w.shape != (dim,):
        raise DomainError("dimension-mismatch", f"--window has {w.size} entries, the group acts on {dim}.")
    return w


def cmd_bounds(ctx: CommandContext) -> int:
    """Optimal bi-Lipschitz constants of Φ_{w,j} on the orbit closure of a dataset."""
    _, action = ctx.load_action(ctx.args.group_spec)
    closure = _closed_dataset(ctx, action)
    if ctx.args.window is not None:
        w = _parse_window(ctx.args.window, action.dim)
    else:
        w = sample_windows(action.dim, 1, ctx.seed).windows[0]
    ctx.manifest.config.update({'window': to_jsonable(w), 'j': ctx.args.j})

    report = lipschitz_bounds(action, w, ctx.args.j, closure)
    ctx.emit_json({
        **to_jsonable(report),
        'window': w,
        'j': ctx.args.j,
        'points_after_closure': len(closure)
    })
    return EXIT_OK


def cmd_separate(ctx: CommandContext) -> int:
    """Orbit pairs the sampled map fails to separate, plus per-window margins."""
    spec, action = ctx.load_action(ctx.args.group_spec)
    closure = _closed_dataset(ctx, action)
    config = resolve_config(ctx, spec, action)

    unseparated = separation_check(action, config.bank, config.selection, closure, tol=ctx.args.tol)
    payload = {
        'unseparated': unseparated,
        'separated': not unseparated,
        'points_after_closure': len(closure),
        'm': config.selection.m
    }
    if config.reduction is not None:
        payload['unseparated_after_reduction'] = separation_check(
            action, config.bank, config.selection, closure, tol=ctx.args.tol, reduction=config.reduction
        )
    try:
        margins = [window_margin(action, w, closure) for w in config.bank.windows]
        payload['margins'] = [{'margin': value, 'witness': witness} for value, witness in margins]
    except DomainError as e:
        if e.kind != "fewer-than-two-orbits":
            raise
        payload['margins'] = None
    ctx.emit_json(payload)
    return EXIT_OK


def cmd_collide(ctx: CommandContext) -> int:
    """Seeded near-collision search; always exits 0, the ratio is the finding."""
    spec, action = ctx.load_action(ctx.args.group_spec)
    config = resolve_config(ctx, spec, action)
    report = collision_search(
        action,
        config.bank,
        config.selection,
        budget=ctx.args.budget,
        floor=ctx.args.floor,
        seed=derive_seeds(ctx.seed, 3)[2],
        steps=ctx.args.steps,
        threads=ctx.args.threads
    )
    ctx.emit_json({
        **to_jsonable(report),
        'master_seed': ctx.seed,
        'p': config.selection.p,
        'm': config.selection.m
    })
    return EXIT_OK


def register(subparsers, common) -> None:
    p_bounds = subparsers.add_parser('bounds', parents=[common], help="Bi-Lipschitz constants of one coorbit entry")
    p_bounds.add_argument('group_spec')
    p_bounds.add_argument('dataset')
    p_bounds.add_argument('--id-column', action='store_true', help="First CSV column holds point ids")
    p_bounds.add_argument('--j', type=int, default=1, help="Coorbit rank (default: 1, the max filter)")
    p_bounds.add_argument('--seed', '--window-seed', dest='seed', type=int, default=None,
                          help="Seed of the Gaussian window (COORBIT_SEED overrides)")
    p_bounds.add_argument('--window', default=None, help="Explicit window as comma-separated numbers")
    p_bounds.set_defaults(func=cmd_bounds)

    p_separate = subparsers.add_parser('separate', parents=[common], help="Check orbit separation on a dataset")
    p_separate.add_argument('group_spec')
    p_separate.add_argument('dataset')
    p_separate.add_argument('--id-column', action='store_true', help="First CSV column holds point ids")
    p_separate.add_argument('--tol', type=float, default=SEPARATION_TOL, help="Relative separation tolerance")
    add_config_arguments(p_separate)
    p_separate.set_defaults(func=cmd_separate)

    p_collide = subparsers.add_parser('collide', parents=[common], help="Adversarial near-collision search")
    p_collide.add_argument('group_spec')
    p_collide.add_argument('--budget', type=int, default=COLLISION_BUDGET, help="Random restarts")
    p_collide.add_argument('--floor', type=float, default=COLLISION_FLOOR, help="Minimum orbit distance")
    p_collide.add_argument('--steps', type=int, default=COLLISION_STEPS, help="Descent steps per restart")
    add_config_arguments(p_collide)
    p_collide.set_defaults(func=cmd_collide)
