"""Wall-time benchmark of the filtration-to-diagram pipeline.

Each (method, n, trial) cell runs in its own process so a hard timeout can
be enforced; the timer starts after the cloud is in memory and stops when
the diagram exists, so file and IPC costs stay out of the measurement.
Timed-out cells are recorded at the cap, matching how capped runtimes are
usually reported, and the memory of the child is limited so a runaway
enumeration dies in the child rather than the parent.
"""

from __future__ import annotations

import multiprocessing as mp
import statistics
from dataclasses import dataclass

from .datagen import ShapeClass, add_noise, sample_shape
from .filtration import FiltrationSpec, build
from .persistence import compute_diagram

_MEM_LIMIT_BYTES = 3 << 30


@dataclass(frozen=True)
class BenchCell:
    method: str
    n: int
    trial: int
    seconds: float
    n_simplices: int | None
    status: str  # "ok" | "timeout" | "failed"


def _worker(conn, method, points, max_hom_dim):
    import time

    try:
        import resource

        resource.setrlimit(resource.RLIMIT_AS, (_MEM_LIMIT_BYTES,) * 2)
    except Exception:
        pass
    try:
        from .core import PointCloud

        cloud = PointCloud.from_points(points)
        spec = FiltrationSpec(method=method, max_hom_dim=max_hom_dim)
        t0 = time.perf_counter()
        filt = build(cloud, spec)
        compute_diagram(filt)
        elapsed = time.perf_counter() - t0
        conn.send((elapsed, len(filt)))
    except MemoryError:
        conn.send(None)
    except Exception:
        conn.send(None)
    finally:
        conn.close()


def run_cell(method: str, points, max_hom_dim: int, trial: int,
             timeout: float) -> BenchCell:
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() \
        else mp.get_context("spawn")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_worker,
                       args=(child, method, points, max_hom_dim))
    proc.start()
    child.close()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        parent.close()
        return BenchCell(method, len(points), trial, timeout, None, "timeout")
    result = parent.recv() if parent.poll() else None
    parent.close()
    if result is None:
        return BenchCell(method, len(points), trial, timeout, None, "failed")
    seconds, n_simplices = result
    if seconds > timeout:
        return BenchCell(method, len(points), trial, timeout, n_simplices,
                         "timeout")
    return BenchCell(method, len(points), trial, seconds, n_simplices, "ok")


def run_grid(shape: ShapeClass, nu: float, sizes, methods, max_hom_dim: int,
             trials: int, timeout: float, seed: int):
    """All cells plus per-(method, n) medians.

    The same cloud is used for every method within a (n, trial) pair.
    Timeouts and failures enter the median at the cap value.
    """
    cells = []
    medians = []
    for n in sizes:
        clouds = {}
        for trial in range(trials):
            base = sample_shape(shape, n, seed + 1000 * trial + n)
            clouds[trial] = add_noise(base, nu, seed + 1000 * trial + n + 1)
        for method in methods:
            times = []
            for trial in range(trials):
                cell = run_cell(method, clouds[trial].points, max_hom_dim,
                                trial, timeout)
                cells.append(cell)
                times.append(cell.seconds)
            medians.append((method, n, statistics.median(times)))
    return cells, medians
