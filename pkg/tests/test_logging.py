import os
from unittest import mock

import pytest

from mrpcen import (
    ClipPipe,
    ClipResult,
    ClipStatus,
    KVLoggingSingleton,
    LocalKVLoggingProvider,
    LoggingConfig,
    ManifestEntry,
    Pipeline,
    RunManager,
    generate_run_id,
    manage_run,
    to_async_generator,
)
from mrpcen.core.logging import kv_logger


@pytest.fixture(scope="function")
def local_provider(tmp_path):
    """A local provider writing to a fresh SQLite file."""
    provider = LocalKVLoggingProvider(
        LoggingConfig(logging_path=os.path.join(tmp_path, "logs.sqlite"))
    )
    yield provider


@pytest.fixture(scope="function")
def configured_singleton(tmp_path):
    KVLoggingSingleton.configure(
        LoggingConfig(logging_path=os.path.join(tmp_path, "runs.sqlite")),
        force=True,
    )
    yield KVLoggingSingleton
    KVLoggingSingleton.configure(LoggingConfig(provider=None), force=True)


class EchoClipPipe(ClipPipe):
    def _process(self, entry: ManifestEntry, **kwargs) -> list[ClipResult]:
        return [ClipResult(clip_id=entry.clip_id, status=ClipStatus.OK)]


@pytest.mark.asyncio
async def test_local_logging(local_provider):
    run_id = generate_run_id()
    async with local_provider:
        await local_provider.log(run_id, "key", "value")
        logs = await local_provider.get_logs([run_id])
    assert len(logs) == 1
    assert logs[0]["key"] == "key"
    assert logs[0]["value"] == "value"
    assert logs[0]["log_id"] == run_id


@pytest.mark.asyncio
async def test_multiple_log_entries(local_provider):
    entries = [(generate_run_id(), f"key_{i}", f"value_{i}") for i in range(3)]
    async with local_provider:
        for run_id, key, value in entries:
            await local_provider.log(run_id, key, value)
        logs = await local_provider.get_logs([e[0] for e in entries])
    assert len(logs) == 3
    for log in logs:
        selected = [e for e in entries if e[0] == log["log_id"]][0]
        assert log["key"] == selected[1]
        assert log["value"] == selected[2]


@pytest.mark.asyncio
async def test_limit_per_run(local_provider):
    run_id = generate_run_id()
    async with local_provider:
        for i in range(10):
            await local_provider.log(run_id, "clip", f"value_{i}")
        logs = await local_provider.get_logs([run_id], limit_per_run=4)
    assert len(logs) == 4


@pytest.mark.asyncio
async def test_run_type_filter(local_provider):
    run_0, run_1 = generate_run_id(), generate_run_id()
    async with local_provider:
        await local_provider.log(
            run_0, "pipeline_type", "featurization", is_info_log=True
        )
        await local_provider.log(run_0, "clip", "a")
        await local_provider.log(
            run_1, "pipeline_type", "eval", is_info_log=True
        )
        await local_provider.log(run_1, "clip", "b")
        run_info = await local_provider.get_run_info(
            log_type_filter="featurization"
        )
        logs = await local_provider.get_logs([r.run_id for r in run_info])
    assert [r.run_id for r in run_info] == [run_0]
    assert len(logs) == 1
    assert logs[0]["value"] == "a"


@pytest.mark.asyncio
async def test_info_log_key_must_name_a_type(local_provider):
    async with local_provider:
        with pytest.raises(ValueError):
            await local_provider.log(
                generate_run_id(), "pipeline", "eval", is_info_log=True
            )


def test_invalid_table_name():
    with pytest.raises(ValueError):
        LoggingConfig(log_table="logs; DROP TABLE x").validate()
    with pytest.raises(ValueError):
        LoggingConfig(provider="postgres").validate()


@pytest.mark.asyncio
async def test_disabled_singleton_is_silent():
    KVLoggingSingleton.configure(LoggingConfig(provider=None), force=True)
    assert not KVLoggingSingleton.is_enabled()
    await KVLoggingSingleton.log(generate_run_id(), "clip", "ignored")
    assert await KVLoggingSingleton.get_run_info() == []


@pytest.mark.asyncio
async def test_pipeline_runs_are_logged(configured_singleton):
    pipeline = Pipeline()
    pipeline.add_pipe(EchoClipPipe())
    entries = [
        ManifestEntry(clip_id=f"clip-{i}", audio_path=f"{i}.wav")
        for i in range(3)
    ]
    await pipeline.run(to_async_generator(entries))

    run_info = await configured_singleton.get_run_info(log_type_filter="other")
    assert len(run_info) == 1
    logs = await configured_singleton.get_logs([run_info[0].run_id])
    assert len(logs) == 4
    clip_logs = [log for log in logs if log["key"] == "clip"]
    assert len(clip_logs) == 3
    assert all('"status": "ok"' in log["value"] for log in clip_logs)
    (tally,) = [log for log in logs if log["key"] == "clip_status"]
    assert tally["value"] == '{"ok": 3}'


@pytest.mark.asyncio
async def test_nested_runs_share_one_tally(configured_singleton):
    run_manager = RunManager(configured_singleton)
    async with manage_run(run_manager, "featurization") as outer_id:
        async with manage_run(run_manager, "pipe") as inner_id:
            assert inner_id == outer_id
            await run_manager.record_clip("ok")
            await run_manager.record_clip("failed")
        await run_manager.record_clip("ok")
        info = await run_manager.get_run_info()
        assert info["pipeline_type"] == "featurization"
        assert dict(info["counts"]) == {"ok": 2, "failed": 1}
    assert run_manager.run_info == {}
    assert await run_manager.get_run_info() is None

    logs = await configured_singleton.get_logs([outer_id])
    assert [(log["key"], log["value"]) for log in logs] == [
        ("clip_status", '{"failed": 1, "ok": 2}')
    ]


@pytest.mark.asyncio
async def test_run_without_clips_logs_no_tally(configured_singleton):
    run_manager = RunManager(configured_singleton)
    async with manage_run(run_manager, "eval") as run_id:
        await run_manager.log_run_info("f1", "0.5")
    logs = await configured_singleton.get_logs([run_id])
    assert [log["key"] for log in logs] == ["f1"]


@pytest.mark.asyncio
async def test_record_outside_a_run_is_ignored(configured_singleton):
    run_manager = RunManager(configured_singleton)
    await run_manager.record_clip("ok")
    assert run_manager.run_info == {}


@pytest.mark.asyncio
async def test_logging_failures_do_not_abort(configured_singleton):
    broken = mock.MagicMock(side_effect=OSError("disk full"))
    with mock.patch.object(
        KVLoggingSingleton, "get_instance", broken
    ), mock.patch.object(kv_logger.logger, "error") as error:
        pipeline = Pipeline()
        pipeline.add_pipe(EchoClipPipe())
        entries = [ManifestEntry(clip_id="clip-0", audio_path="0.wav")]
        results = await pipeline.run(to_async_generator(entries))
    assert [r.status for r in results] == [ClipStatus.OK]
    assert error.called
