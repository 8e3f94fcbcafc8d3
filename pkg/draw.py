'''
BSD 3-Clause License

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the conditions of the BSD 3-Clause
License are met. See README.md.
'''
'''
logharm

A toolkit for constructing starlike logharmonic mappings of order alpha from
analytic data and checking their geometric properties numerically.

Writers for image curves: CSV rows, an SVG polyline and an OpenCV rendered PNG.
'''
import csv
import io
import logging

import cv2
import numpy as np
import svgwrite

import misc
from geometry import ImageCurve

logger = logging.getLogger(__name__)

CSV_HEADER = ("theta", "re", "im")

# *******************************************************************************************************************
class _Draw(object):
    r'''
        This is a base class for writing an ImageCurve out.

        See the derived classes below for descriptions of parameters.
    '''

    def __init__(self, size=512, margin=16):

        assert isinstance(size, int) and size > 0, "Size should be a positive integer"
        assert 0 <= margin < size // 2, "Margin should leave room to draw"

        self.size   = size
        self.margin = margin

    def _fit(self, curve):
        r'''
            Map image points to canvas pixels. Both axes share one scale, y points down, and the
            origin is always kept inside the frame.
        '''
        w       = np.append(curve.w, 0.0)
        lo_x    = w.real.min()
        hi_x    = w.real.max()
        lo_y    = w.imag.min()
        hi_y    = w.imag.max()
        span    = max(hi_x - lo_x, hi_y - lo_y)

        if span == 0:
            span = 1.0

        scale   = (self.size - 2 * self.margin) / span
        cx      = 0.5 * (lo_x + hi_x)
        cy      = 0.5 * (lo_y + hi_y)

        def to_canvas(p):
            x = self.size / 2.0 + (np.real(p) - cx) * scale
            y = self.size / 2.0 - (np.imag(p) - cy) * scale
            return x, y

        return to_canvas

    def __call__(self, curve, out):

        assert isinstance(curve, ImageCurve), "Input should be an ImageCurve"

        return self.make(curve, out)

# *******************************************************************************************************************
class CSVCurve(_Draw):
    r'''
        Rows "theta,re,im" with LF line endings and a fixed number of significant digits.

        Parameters

            digits:   Significant digits per number.
    '''

    def __init__(self, digits=misc.SIG_DIGITS):

        super(CSVCurve, self).__init__()

        self.digits = digits

    def make(self, curve, stream):
        r'''
            Input:
                curve:  An ImageCurve.
                stream: A text stream.
        '''
        fmt     = "{{:.{}g}}".format(self.digits)
        writer  = csv.writer(stream, lineterminator="\n")

        writer.writerow(CSV_HEADER)

        for t, w in zip(curve.theta, curve.w):
            writer.writerow((fmt.format(t), fmt.format(w.real), fmt.format(w.imag)))

        return stream

# *******************************************************************************************************************
class SVGCurve(_Draw):
    r'''
        A single polyline with one vertex per sample.

        Parameters

            size:     Canvas width and height in pixels.
            margin:   Empty border in pixels.
            stroke:   Stroke color.
    '''

    def __init__(self, size=512, margin=16, stroke="black"):

        super(SVGCurve, self).__init__(size=size, margin=margin)

        self.stroke = stroke

    def drawing(self, curve):

        to_canvas   = self._fit(curve)
        xs, ys      = to_canvas(curve.w)
        points      = [(round(float(x), 4), round(float(y), 4)) for x, y in zip(xs, ys)]

        dwg = svgwrite.Drawing(size=(self.size, self.size), profile="tiny")
        dwg.add(dwg.polyline(points=points, stroke=self.stroke, fill="none", stroke_width=1))

        return dwg

    def make(self, curve, out):
        r'''
            Input:
                out:    A file name or a text stream.
        '''
        dwg = self.drawing(curve)

        if isinstance(out, str):
            dwg.saveas(out)
        else:
            dwg.write(out)

        return out

# *******************************************************************************************************************
class PNGCurve(_Draw):
    r'''
        The curve rasterized with OpenCV on a white canvas, with the image axes through 0.

        Parameters

            size:     Canvas width and height in pixels.
            margin:   Empty border in pixels.
            color:    BGR color of the curve.
    '''

    def __init__(self, size=512, margin=16, color=(200, 60, 0)):

        super(PNGCurve, self).__init__(size=size, margin=margin)

        assert len(color) == 3, "Color should be a BGR triple"

        self.color = tuple(int(c) for c in color)

    def render(self, curve):
        r'''
            Returns:
                A numpy array sized [size x size x 3].
        '''
        img         = np.full((self.size, self.size, 3), 255, dtype=np.uint8)
        to_canvas   = self._fit(curve)
        ox, oy      = to_canvas(0.0)

        cv2.line(img, (0, int(round(oy))), (self.size - 1, int(round(oy))), (180, 180, 180), 1)
        cv2.line(img, (int(round(ox)), 0), (int(round(ox)), self.size - 1), (180, 180, 180), 1)

        xs, ys  = to_canvas(curve.w)
        pts     = np.stack([xs, ys], axis=1).round().astype(np.int32).reshape(-1, 1, 2)

        cv2.polylines(img, [pts], isClosed=True, color=self.color, thickness=1, lineType=cv2.LINE_AA)

        return img

    def make(self, curve, path):

        assert isinstance(path, str), "PNG output needs a file name"

        if not cv2.imwrite(path, self.render(curve)):
            raise misc.LogharmError("could not write {}".format(path))

        return path

# *******************************************************************************************************************
def write_csv(curve, stream=None, digits=misc.SIG_DIGITS):
    r'''
        Write the curve as CSV. Returns the text when no stream is given.
    '''
    if stream is None:
        return CSVCurve(digits)(curve, io.StringIO()).getvalue()

    return CSVCurve(digits)(curve, stream)

def write_svg(curve, out=None, size=512):

    if out is None:
        return SVGCurve(size=size).drawing(curve).tostring()

    return SVGCurve(size=size)(curve, out)

def write_png(curve, path, size=512):

    logger.debug("rendering %d samples of %s to %s", len(curve), curve.map_id, path)

    return PNGCurve(size=size)(curve, path)
