"""Commands that inspect a group: verify, gamma, plan."""

from .context import CommandContext
from config.settings import EXIT_DOMAIN, EXIT_OK
from groups.verification import verify_group
from services.embedding_service import plan_for
from services.gamma_service import gamma_profile


def cmd_verify(ctx: CommandContext) -> int:
    """Check the group law; exit 2 when any check fails."""
    _, action = ctx.load_action(ctx.args.group_spec, verified=False)
    report = verify_group(action)
    ctx.emit_json(report)
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_gamma(ctx: CommandContext) -> int:
    _, action = ctx.load_action(ctx.args.group_spec)
    profile = gamma_profile(action)
    ctx.emit_json({
        'dim': profile.dim,
        'order': profile.order,
        'gamma': profile.gamma,
        'per_element': profile.per_element,
        'p_table': profile.p_table,
        'p_1': profile.p_1
    })
    return EXIT_OK


def cmd_plan(ctx: CommandContext) -> int:
    _, action = ctx.load_action(ctx.args.group_spec)
    selection = plan_for(action, ctx.args.n, ctx.args.p)
    ctx.manifest.config['selection'] = [list(ranks) for ranks in selection.per_window]
    ctx.emit_json({
        'n': ctx.args.n,
        'p': selection.p,
        'm': selection.m,
        'sizes': selection.sizes,
        'selection': selection.per_window
    })
    return EXIT_OK


def register(subparsers, common) -> None:
    p_verify = subparsers.add_parser('verify', parents=[common], help="Verify the group law of a group spec")
    p_verify.add_argument('group_spec')
    p_verify.set_defaults(func=cmd_verify)

    p_gamma = subparsers.add_parser('gamma', parents=[common], help="γ profile and window counts p_n")
    p_gamma.add_argument('group_spec')
    p_gamma.set_defaults(func=cmd_gamma)

    p_plan = subparsers.add_parser('plan', parents=[common], help="Selection set for (--n, --p)")
    p_plan.add_argument('group_spec')
    add_plan_arguments(p_plan)
    p_plan.set_defaults(func=cmd_plan)


def add_plan_arguments(parser) -> None:
    parser.add_argument('--n', type=int, default=1,
                        help="Coorbit entries per rich window; 1 is the max filter (default: 1)")
    parser.add_argument('--p', type=int, default=None,
                        help="Window count (default: 2d for n = 1, p_n otherwise)")
