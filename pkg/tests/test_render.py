import pytest

from oscm.algorithms import GREEDY, play
from oscm.model import Request, apply, empty_state, random_two_regular
from oscm.render import RenderSpec, render_svg


def fig4_state():
    state = apply(empty_state(5), Request(1, 3), 2)
    return apply(state, Request(3, 5), 5)


def test_empty_board_counts():
    svg = render_svg(empty_state(3))
    assert svg.count('class="slot"') == 3
    assert svg.count('class="vertex"') == 3
    assert svg.count('class="arrow"') == 6
    assert svg.count('class="edge"') == 0


def test_partial_state_counts():
    svg = render_svg(fig4_state())
    assert svg.count('class="slot fulfilled"') == 2
    assert svg.count('class="slot"') == 3
    assert svg.count('class="edge"') == 4
    assert svg.count('class="arrow"') == 6


def test_full_state_has_no_arrows():
    state = apply(empty_state(2), Request(1, 2), 1)
    state = apply(state, Request(1, 2), 2)
    svg = render_svg(state, RenderSpec(show_arrows=True))
    assert svg.count('class="arrow"') == 0


def test_arrows_can_be_hidden():
    svg = render_svg(empty_state(4), RenderSpec(show_arrows=False))
    assert svg.count('class="arrow"') == 0


def test_highlight_marks_requested_edges():
    svg = render_svg(fig4_state(), RenderSpec(highlight=(0,)))
    assert svg.count('class="edge highlight"') == 2
    assert svg.count('class="edge"') == 2
    with pytest.raises(ValueError):
        render_svg(fig4_state(), RenderSpec(highlight=(5,)))


def test_render_is_byte_stable():
    trace = play(random_two_regular(7, seed=13), GREEDY)
    a = render_svg(trace.final_state)
    b = render_svg(trace.final_state)
    assert a == b
    assert a.startswith("<svg ") and a.endswith("</svg>\n")
