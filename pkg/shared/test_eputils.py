import time
import eputils
import unittest.mock as mock


class TestEputils:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_lcm(self):
        assert eputils.lcm(3, 4) == 12
        assert eputils.lcm(2, 4, 6) == 12
        assert eputils.lcm(7) == 7
        assert eputils.lcm() == 1

    def test_isqrtExact(self):
        assert eputils.isqrtExact(0) == 0
        assert eputils.isqrtExact(1) == 1
        assert eputils.isqrtExact(144) == 12
        assert eputils.isqrtExact(145) is None
        assert eputils.isqrtExact(-4) is None

    def test_Timeit(self):
        with eputils.Timeit('foo') as timer:
            assert timer.elapsed is None
            time.sleep(0.01)
        assert timer.elapsed > 0

    @mock.patch.object(eputils.logit, 'debug')
    def test_timefunc(self, m_debug):
        @eputils.timefunc
        def square(x):
            return x * x

        assert square.__name__ == 'square'
        assert m_debug.call_count == 0
        assert square(3) == 9
        assert m_debug.call_count == 1
        assert m_debug.call_args[0][1] == 'square'

    @mock.patch.object(eputils.logit, 'debug')
    def test_logMetricQty(self, m_debug):
        eputils.logMetricQty('#tables', 5)
        assert m_debug.call_count == 1
        m_debug.assert_called_with('QTY %s: %d', '#tables', 5)

        # Invalid arguments are ignored.
        m_debug.reset_mock()
        eputils.logMetricQty(5, 5)
        eputils.logMetricQty('#tables', 1.5)
        eputils.logMetricQty('#tables', True)
        assert m_debug.call_count == 0
