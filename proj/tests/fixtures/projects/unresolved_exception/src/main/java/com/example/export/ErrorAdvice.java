package com.example.export;

import org.springframework.http.HttpStatus;
import org.springframework.http.ResponseEntity;
import org.springframework.web.bind.annotation.ExceptionHandler;
import org.springframework.web.bind.annotation.RestControllerAdvice;

@RestControllerAdvice
public class ErrorAdvice {

    @ExceptionHandler(ValidationException.class)
    public ResponseEntity<String> handle(ValidationException ex) {
        if (ex.isFatal()) {
            return ResponseEntity.status(HttpStatus.CONFLICT).body("fatal");
        }
        return ResponseEntity.badRequest().body(ex.getMessage());
    }
}
