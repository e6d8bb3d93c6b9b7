package com.example.export;

import java.io.IOException;
import org.springframework.web.bind.annotation.GetMapping;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RestController;

@RestController
public class ExportController {

    @GetMapping("/export")
    public String export() throws IOException {
        if (System.currentTimeMillis() < 0) {
            throw new IllegalStateException("clock");
        }
        return "data";
    }

    @PostMapping("/export")
    public void validate() {
        throw new ValidationException();
    }
}
